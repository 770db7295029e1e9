//! The universal host graph for forests.
//!
//! Vertex `i` is the node with preorder rank `i` in the complete binary tree
//! `B`. Besides the tree edges, `{u, v}` is an edge when
//!
//! - (E1) one is an ancestor of the other,
//! - (E2) one lies in the subtree of a left or right level-neighbor of the
//!   other, or
//! - (E3) one lies in the subtree of the left level-neighbor of the other's
//!   parent.
//!
//! For `n` not of the form `2^h - 1` the graph is the prefix `G[0, n-1]` of the
//! graph built on the minimal complete tree.

use alloc::vec::Vec;

use crate::btree::BTreeShape;
use crate::geometry;
use crate::{Error, Result};

/// Closed interval `[lo, hi]` of vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::PreconditionViolated("interval lo > hi"));
        }
        Ok(Interval { lo, hi })
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn iter(&self) -> core::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl core::fmt::Display for Interval {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The host graph `G` on vertices `0..n`.
///
/// Edge membership is decided by index arithmetic; adjacency lists are
/// produced on demand.
#[derive(Debug, Clone)]
pub struct UniversalGraph {
    shape: BTreeShape,
    level: Vec<u8>,
    rank: Vec<u32>,
}

impl UniversalGraph {
    pub fn build(n: usize) -> Result<Self> {
        let shape = BTreeShape::new(n)?;
        let mut level = Vec::with_capacity(n);
        let mut rank = Vec::with_capacity(n);
        for i in 0..n {
            let (l, p) = shape.locate_unchecked(i);
            level.push(l as u8);
            rank.push(BTreeShape::height_rank_at(l, p) as u32);
        }
        Ok(UniversalGraph { shape, level, rank })
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn shape(&self) -> &BTreeShape {
        &self.shape
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Height rank (0 = highest) of vertex `i`; `i < n`.
    #[inline]
    pub fn rank(&self, i: usize) -> usize {
        self.rank[i] as usize
    }

    #[inline]
    pub fn level(&self, i: usize) -> u32 {
        self.level[i] as u32
    }

    #[inline]
    fn pos(&self, i: usize) -> usize {
        let width = 1usize << (self.level(i) - 1);
        2 * width - 2 - self.rank(i)
    }

    /// `u` strictly higher than `w`. Both must be `< n`.
    #[inline]
    pub fn is_higher(&self, u: usize, w: usize) -> bool {
        self.rank[u] < self.rank[w]
    }

    pub fn higher(&self, u: usize, w: usize) -> Result<bool> {
        self.check(u)?;
        self.check(w)?;
        if u == w {
            return Err(Error::EqualIndices(u));
        }
        Ok(self.is_higher(u, w))
    }

    pub(crate) fn nav(&self, i: usize) -> crate::btree::NodeInfo {
        self.shape.nav_at(i, self.level(i), self.pos(i))
    }

    /// Subtree range in the full tree of a node that may lie beyond `n`.
    fn subtree_of(&self, i: usize) -> (usize, usize) {
        let (level, _) = if i < self.n() {
            (self.level(i), 0)
        } else {
            self.shape.locate_unchecked(i)
        };
        (i, i + self.shape.subtree_size_at(level) - 1)
    }

    fn in_subtree_of(&self, root: Option<usize>, v: usize) -> bool {
        root.is_some_and(|r| {
            let (a, b) = self.subtree_of(r);
            a <= v && v <= b
        })
    }

    fn directed_edge(&self, u: usize, v: usize) -> bool {
        let info = self.nav(u);
        // (E1)
        if info.subtree_range.0 <= v && v <= info.subtree_range.1 {
            return true;
        }
        // (E2)
        if self.in_subtree_of(info.left_level_neighbor, v)
            || self.in_subtree_of(info.right_level_neighbor, v)
        {
            return true;
        }
        // (E3)
        if let Some(p) = info.parent {
            let (pl, pp) = self.shape.locate_unchecked(p);
            if pp > 0 {
                let left = self.shape.index_unchecked(pl, pp - 1);
                return self.in_subtree_of(Some(left), v);
            }
        }
        false
    }

    /// Edge test for distinct in-range vertices.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n() && v < self.n() && (self.directed_edge(u, v) || self.directed_edge(v, u))
    }

    pub fn is_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::EqualIndices(u));
        }
        Ok(self.has_edge(u, v))
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let n = self.n();
        let mut out = Vec::new();
        let push_range = |out: &mut Vec<usize>, root: Option<usize>| {
            if let Some(r) = root {
                if r < n {
                    let (a, b) = self.subtree_of(r);
                    out.extend(a..=b.min(n - 1));
                }
            }
        };
        let info = self.nav(v);
        // outgoing groups of v
        push_range(&mut out, Some(v));
        push_range(&mut out, info.left_level_neighbor);
        push_range(&mut out, info.right_level_neighbor);
        if let Some(p) = info.parent {
            push_range(&mut out, self.nav(p).left_level_neighbor);
        }
        // incoming groups: every u whose outgoing groups reach v hangs off an
        // ancestor-or-self w of v
        let mut w = Some(v);
        while let Some(x) = w {
            let wi = self.nav(x);
            out.push(x);
            for nb in [wi.left_level_neighbor, wi.right_level_neighbor]
                .into_iter()
                .flatten()
            {
                out.push(nb);
            }
            if let Some(r) = wi.right_level_neighbor {
                let ri = self.shape.nav_at(r, wi.level, wi.pos + 1);
                out.extend(ri.left_child);
                out.extend(ri.right_child);
            }
            w = wi.parent;
        }
        out.retain(|&u| u < n && u != v);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sorted adjacency lists of all vertices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.neighbors(v)).collect()
    }

    /// All edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for w in self.neighbors(u) {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.neighbors(v).len()).sum::<usize>() / 2
    }

    pub fn interval(&self, lo: usize, hi: usize) -> Result<Interval> {
        let iv = Interval::new(lo, hi)?;
        self.check(hi)?;
        Ok(iv)
    }

    /// Highest vertex of `G(I)`.
    pub fn highest(&self, iv: Interval) -> usize {
        iv.iter()
            .min_by_key(|&i| self.rank[i])
            .expect("intervals are non-empty")
    }

    /// Highest and second highest vertex of `G(I)`, `|I| >= 2`.
    fn two_highest(&self, iv: Interval) -> (usize, usize) {
        let mut best = (usize::MAX, usize::MAX);
        for i in iv.iter() {
            if best.0 == usize::MAX || self.is_higher(i, best.0) {
                best = (i, best.0);
            } else if best.1 == usize::MAX || self.is_higher(i, best.1) {
                best.1 = i;
            }
        }
        best
    }

    /// Centers of spanning stars of `G(I)`: the highest vertex `k`, the second
    /// highest `s`, and the highest vertex `t` of `[k+1, hi]` when `k < hi`.
    pub fn star_centers(&self, iv: Interval) -> Result<(usize, usize, Option<usize>)> {
        self.check(iv.hi)?;
        if iv.len() < 2 {
            return Err(Error::IntervalTooSmall);
        }
        let (k, s) = self.two_highest(iv);
        let t = (k < iv.hi).then(|| self.highest(Interval { lo: k + 1, hi: iv.hi }));
        Ok((k, s, t))
    }

    /// Crossing test for two host edges, see [`geometry::edges_cross`].
    pub fn edges_cross(&self, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
        for v in [e1.0, e1.1, e2.0, e2.1] {
            self.check(v)?;
        }
        if e1.0 == e1.1 {
            return Err(Error::DegenerateEdge(e1.0));
        }
        if e2.0 == e2.1 {
            return Err(Error::DegenerateEdge(e2.0));
        }
        Ok(self.crosses(e1, e2))
    }

    #[inline]
    pub(crate) fn crosses(&self, e1: (usize, usize), e2: (usize, usize)) -> bool {
        geometry::cross_by_rank(|i| self.rank[i] as usize, e1, e2)
    }
}
