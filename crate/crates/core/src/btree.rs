//! Index arithmetic on the complete rooted ordered binary tree.
//!
//! Nodes are identified by their preorder rank. Levels are 1-based (root on
//! level 1, leaves on level `h`), positions within a level are 0-based from
//! the left. Nothing is materialized: every query walks at most `h` steps.

use crate::{Error, Result};

/// Complete binary tree of height `h` with `2^h - 1` nodes, of which the first
/// `n` in preorder are active.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BTreeShape {
    height: u32,
    m: usize,
    n: usize,
}

/// Everything about one node that the host graph construction asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeInfo {
    pub index: usize,
    pub level: u32,
    pub pos: usize,
    pub parent: Option<usize>,
    pub left_child: Option<usize>,
    pub right_child: Option<usize>,
    pub left_level_neighbor: Option<usize>,
    pub right_level_neighbor: Option<usize>,
    /// Closed preorder range of the subtree rooted here (full tree).
    pub subtree_range: (usize, usize),
}

impl BTreeShape {
    /// Largest supported height; keeps every index inside `u32`-ish ranges
    /// and shifts well-defined on 32-bit targets.
    pub const MAX_HEIGHT: u32 = 30;

    /// Minimal complete tree holding `n` active nodes.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(0));
        }
        let mut height = 1;
        while (1usize << height) - 1 < n {
            height += 1;
            if height > Self::MAX_HEIGHT {
                return Err(Error::SizeTooLarge {
                    n,
                    cap: (1usize << Self::MAX_HEIGHT) - 1,
                });
            }
        }
        Ok(BTreeShape {
            height,
            m: (1usize << height) - 1,
            n,
        })
    }

    /// Full tree of height `h` with every node active.
    pub fn full(height: u32) -> Result<Self> {
        if height == 0 || height > Self::MAX_HEIGHT {
            return Err(Error::InvalidSize(height as usize));
        }
        Self::new((1usize << height) - 1)
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    /// Node count of the full tree.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Active prefix length.
    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.m {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.m,
            })
        } else {
            Ok(())
        }
    }

    /// Node count of a subtree whose root sits on `level`.
    #[inline]
    pub fn subtree_size_at(&self, level: u32) -> usize {
        (1usize << (self.height - level + 1)) - 1
    }

    /// `(level, pos)` of preorder index `i`.
    pub fn locate(&self, i: usize) -> Result<(u32, usize)> {
        self.check(i)?;
        Ok(self.locate_unchecked(i))
    }

    pub(crate) fn locate_unchecked(&self, i: usize) -> (u32, usize) {
        let mut level = 1;
        let mut pos = 0;
        let mut base = 0;
        let mut sub_height = self.height;
        while i != base {
            let half = (1usize << (sub_height - 1)) - 1;
            if i <= base + half {
                base += 1;
                pos *= 2;
            } else {
                base += half + 1;
                pos = 2 * pos + 1;
            }
            sub_height -= 1;
            level += 1;
        }
        (level, pos)
    }

    /// Preorder index of the node at `(level, pos)`.
    pub fn index(&self, level: u32, pos: usize) -> Result<usize> {
        if level == 0 || level > self.height {
            return Err(Error::IndexOutOfRange {
                index: level as usize,
                bound: self.height as usize + 1,
            });
        }
        if pos >= 1usize << (level - 1) {
            return Err(Error::IndexOutOfRange {
                index: pos,
                bound: 1usize << (level - 1),
            });
        }
        Ok(self.index_unchecked(level, pos))
    }

    pub(crate) fn index_unchecked(&self, level: u32, pos: usize) -> usize {
        let mut i = 0;
        for depth in 1..level {
            // bit for the step from depth to depth + 1, most significant first
            let bit = (pos >> (level - 1 - depth)) & 1;
            if bit == 0 {
                i += 1;
            } else {
                i += self.subtree_size_at(depth + 1) + 1;
            }
        }
        i
    }

    /// Full navigation record for node `i`.
    pub fn nav(&self, i: usize) -> Result<NodeInfo> {
        self.check(i)?;
        let (level, pos) = self.locate_unchecked(i);
        Ok(self.nav_at(i, level, pos))
    }

    pub(crate) fn nav_at(&self, i: usize, level: u32, pos: usize) -> NodeInfo {
        let width = 1usize << (level - 1);
        let parent = (level > 1).then(|| self.index_unchecked(level - 1, pos / 2));
        let (left_child, right_child) = if level < self.height {
            (Some(i + 1), Some(i + self.subtree_size_at(level + 1) + 1))
        } else {
            (None, None)
        };
        let left_level_neighbor = (pos > 0).then(|| self.index_unchecked(level, pos - 1));
        let right_level_neighbor = (pos + 1 < width).then(|| self.index_unchecked(level, pos + 1));
        NodeInfo {
            index: i,
            level,
            pos,
            parent,
            left_child,
            right_child,
            left_level_neighbor,
            right_level_neighbor,
            subtree_range: (i, i + self.subtree_size_at(level) - 1),
        }
    }

    /// Position of `i` in the height order: 0 for the root, then level by
    /// level with the rightmost node first. Smaller rank means higher.
    #[inline]
    pub fn height_rank_at(level: u32, pos: usize) -> usize {
        let width = 1usize << (level - 1);
        (width - 1) + (width - 1 - pos)
    }

    /// See [`BTreeShape::height_rank_at`].
    pub fn height_rank(&self, i: usize) -> Result<usize> {
        let (level, pos) = self.locate(i)?;
        Ok(Self::height_rank_at(level, pos))
    }

    /// Whether `u` is strictly higher than `w`: on a smaller level, or on the
    /// same level and further right.
    pub fn higher(&self, u: usize, w: usize) -> Result<bool> {
        self.check(u)?;
        self.check(w)?;
        if u == w {
            return Err(Error::EqualIndices(u));
        }
        let (lu, pu) = self.locate_unchecked(u);
        let (lw, pw) = self.locate_unchecked(w);
        Ok(lu < lw || (lu == lw && pu > pw))
    }

    /// Whether `v` lies in the subtree of `u` (including `u` itself).
    pub fn in_subtree(&self, u: usize, v: usize) -> Result<bool> {
        let info = self.nav(u)?;
        self.check(v)?;
        Ok(info.subtree_range.0 <= v && v <= info.subtree_range.1)
    }
}
