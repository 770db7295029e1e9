//! Convex-position hosts: a caterpillar host driven by the ruler sequence and
//! a two-chord host made of a spanning cycle plus `O(√n)` full stars.
//!
//! Host vertices `0..n` sit on a circle in counterclockwise order, so two
//! chords cross exactly when their endpoints interleave.

use alloc::vec;
use alloc::vec::Vec;

use crate::embedder::{CaseLabel, Embedding, HostRef, Step};
use crate::tree::Forest;
use crate::ugraph::Interval;
use crate::{Error, Result};

/// Prefix of the ruler sequence `1, 3, 1, 7, 1, 3, 1, 15, ...`.
///
/// The full block of length `2^h - 1` is the lower block, then `2^h - 1`,
/// then the lower block again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiSequence {
    terms: Vec<usize>,
}

impl PiSequence {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(n));
        }
        Ok(PiSequence {
            terms: (1..=n).map(ruler).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    /// Term at 0-based position `i`.
    pub fn term(&self, i: usize) -> usize {
        self.terms[i]
    }

    pub fn sum(&self) -> usize {
        self.terms.iter().sum()
    }
}

/// Term at 1-based position `i`: `2^(v+1) - 1` where `2^v` exactly divides `i`.
fn ruler(i: usize) -> usize {
    (1usize << (i.trailing_zeros() + 1)) - 1
}

/// First `n` terms of the ruler sequence.
pub fn pi_sequence(n: usize) -> Result<PiSequence> {
    PiSequence::new(n)
}

/// Construction a [`ConvexHost`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConvexKind {
    Caterpillar,
    TwoChord,
    Complete,
    Custom,
}

/// Graph on `n` points in convex position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexHost {
    kind: ConvexKind,
    adj: Vec<Vec<usize>>,
}

impl ConvexHost {
    /// Host with an arbitrary edge set; duplicates are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_kind(n, ConvexKind::Custom, edges.iter().copied())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w)));
        Self::with_kind(n, ConvexKind::Complete, edges)
    }

    /// The bare spanning cycle `0, 1, ..., n - 1`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize(n));
        }
        Self::with_kind(n, ConvexKind::Custom, (0..n).map(|u| (u, (u + 1) % n)))
    }

    fn with_kind(
        n: usize,
        kind: ConvexKind,
        edges: impl Iterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(n));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, w) in edges {
            let bad = u.max(w);
            if bad >= n {
                return Err(Error::IndexOutOfRange { index: bad, bound: n });
            }
            if u == w {
                return Err(Error::DegenerateEdge(u));
            }
            adj[u].push(w);
            adj[w].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
            nb.dedup();
        }
        Ok(ConvexHost { kind, adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn kind(&self) -> ConvexKind {
        self.kind
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn is_edge(&self, u: usize, w: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&w).is_ok()
    }

    /// Edges `(u, w)` with `u < w`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&w| w > u).map(|&w| (u, w)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Whether `{i, i + 1 mod n}` is an edge for every `i`.
    pub fn has_spanning_cycle(&self) -> bool {
        let n = self.n();
        n >= 3 && (0..n).all(|i| self.is_edge(i, (i + 1) % n))
    }

    pub fn descriptor(&self) -> HostRef {
        HostRef::Convex {
            n: self.n(),
            kind: self.kind,
        }
    }
}

fn circular_distance(n: usize, u: usize, w: usize) -> usize {
    let d = u.abs_diff(w);
    d.min(n - d)
}

/// Caterpillar host: `i` and `j` are adjacent iff their circular distance is at
/// most `max(π(i), π(j))`.
pub fn build_caterpillar_host(n: usize) -> Result<ConvexHost> {
    let pi = pi_sequence(n)?;
    let mut edges = Vec::new();
    for i in 0..n {
        let reach = pi.term(i).min(n / 2);
        for d in 1..=reach {
            edges.push((i, (i + d) % n));
            edges.push((i, (i + n - d) % n));
        }
    }
    let edges = edges.into_iter().filter(|&(u, w)| u != w);
    ConvexHost::with_kind(n, ConvexKind::Caterpillar, edges)
}

/// Star centers of the two-chord host: `{0, .., r - 1} ∪ {r, 2r, .., r·r}`
/// reduced mod `n`, where `r = ⌊√n⌋`. Sorted, without duplicates.
pub fn twochord_star_set(n: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::InvalidSize(n));
    }
    let r = n.isqrt();
    let mut s: Vec<usize> = (0..r).chain((1..=r).map(|i| (i * r) % n)).collect();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Two-chord host: spanning cycle plus a full star at every member of
/// [`twochord_star_set`].
pub fn build_twochord_host(n: usize) -> Result<ConvexHost> {
    if n < 3 {
        return Err(Error::InvalidSize(n));
    }
    let stars = twochord_star_set(n)?;
    let cycle = (0..n).map(|u| (u, (u + 1) % n));
    let spokes = stars
        .into_iter()
        .flat_map(|c| (0..n).filter(move |&w| w != c).map(move |w| (c, w)));
    ConvexHost::with_kind(n, ConvexKind::TwoChord, cycle.chain(spokes))
}

/// Caterpillar as a spine path with the leaves hanging off each spine vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    n: usize,
    spine: Vec<usize>,
    leaves: Vec<Vec<usize>>,
}

impl Caterpillar {
    /// `leaves[i]` are the leaves attached to `spine[i]`; together they must
    /// list every vertex `0..n` exactly once.
    pub fn new(n: usize, spine: Vec<usize>, leaves: Vec<Vec<usize>>) -> Result<Self> {
        if spine.is_empty() || spine.len() != leaves.len() {
            return Err(Error::NotACaterpillar);
        }
        let mut seen = vec![false; n];
        for &v in spine.iter().chain(leaves.iter().flatten()) {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, bound: n });
            }
            if seen[v] {
                return Err(Error::NotACaterpillar);
            }
            seen[v] = true;
        }
        if seen.contains(&false) {
            return Err(Error::NotACaterpillar);
        }
        Ok(Caterpillar { n, spine, leaves })
    }

    /// Recognize a caterpillar. The spine is the path of non-leaf vertices,
    /// starting from its lower-id end; trees on at most two vertices use the
    /// lowest id as a one-vertex spine.
    pub fn from_forest(f: &Forest) -> Result<Self> {
        let n = f.n();
        if n == 0 || !f.is_tree() {
            return Err(Error::NotACaterpillar);
        }
        let adj = f.adjacency();
        let deg = f.degree();
        let inner: Vec<usize> = (0..n).filter(|&v| deg[v] >= 2).collect();
        if inner.is_empty() {
            let spine = vec![0];
            let leaves = vec![(1..n).collect()];
            return Self::new(n, spine, leaves);
        }
        let inner_deg = |v: usize| adj[v].iter().filter(|&&w| deg[w] >= 2).count();
        if inner.iter().any(|&v| inner_deg(v) > 2) {
            return Err(Error::NotACaterpillar);
        }
        let start = *inner
            .iter()
            .find(|&&v| inner_deg(v) <= 1)
            .ok_or(Error::NotACaterpillar)?;
        let mut spine = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&w| deg[w] >= 2 && w != prev) {
            spine.push(next);
            prev = cur;
            cur = next;
        }
        if spine.len() != inner.len() {
            return Err(Error::NotACaterpillar);
        }
        let leaves = spine
            .iter()
            .map(|&u| adj[u].iter().copied().filter(|&w| deg[w] == 1).collect())
            .collect();
        Self::new(n, spine, leaves)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn leaves(&self) -> &[Vec<usize>] {
        &self.leaves
    }

    /// Spine edges followed by leaf edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.spine.windows(2).map(|w| (w[0], w[1])).collect();
        for (u, ls) in self.spine.iter().zip(&self.leaves) {
            out.extend(ls.iter().map(|&l| (*u, l)));
        }
        out
    }

    pub fn to_forest(&self) -> Forest {
        Forest::new(self.n, self.edges()).expect("caterpillar edges form a tree")
    }
}

/// Place each spine star on its own block of consecutive host vertices, spine
/// vertex at the block's largest π-term (leftmost on ties), leaves on the rest
/// of the block in order.
pub fn embed_caterpillar(host: &ConvexHost, c: &Caterpillar) -> Result<Embedding> {
    if host.n() != c.n() {
        return Err(Error::SizeMismatch {
            expected: host.n(),
            got: c.n(),
        });
    }
    if host.kind() != ConvexKind::Caterpillar {
        return Err(Error::PreconditionViolated("host is not a caterpillar host"));
    }
    let pi = pi_sequence(host.n())?;
    let mut map = vec![usize::MAX; c.n()];
    let mut offset = 0;
    for (&u, ls) in c.spine.iter().zip(&c.leaves) {
        let block = offset..offset + ls.len() + 1;
        let center = block
            .clone()
            .rev()
            .max_by_key(|&x| pi.term(x))
            .expect("non-empty block");
        map[u] = center;
        for (&leaf, x) in ls.iter().zip(block.filter(|&x| x != center)) {
            map[leaf] = x;
        }
        offset += ls.len() + 1;
    }
    let mut e = Embedding::new(host.descriptor(), map);
    e.provenance.push(Step {
        case: CaseLabel::Caterpillar,
        interval: Interval::new(0, host.n() - 1)?,
    });
    Ok(e)
}

/// Spanning cycle `w_0 .. w_{n-1}` plus pairwise disjoint, non-crossing chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordedCycle {
    n: usize,
    chords: Vec<(usize, usize)>,
}

impl ChordedCycle {
    pub fn new(n: usize, chords: Vec<(usize, usize)>) -> Result<Self> {
        use alloc::format;
        let h = chords.len();
        if n < 2 * h + 2 || n < 3 {
            return Err(Error::InvalidChordedCycle(format!(
                "{h} chords need at least {} vertices, got {n}",
                (2 * h + 2).max(3)
            )));
        }
        let mut used = vec![false; n];
        let mut norm = Vec::with_capacity(h);
        for &(u, w) in &chords {
            if u >= n || w >= n {
                return Err(Error::IndexOutOfRange {
                    index: u.max(w),
                    bound: n,
                });
            }
            if circular_distance(n, u, w) < 2 {
                return Err(Error::InvalidChordedCycle(format!(
                    "({u}, {w}) is not a chord"
                )));
            }
            for v in [u, w] {
                if used[v] {
                    return Err(Error::InvalidChordedCycle(format!(
                        "vertex {v} lies on two chords"
                    )));
                }
                used[v] = true;
            }
            norm.push((u.min(w), u.max(w)));
        }
        for (x, &e1) in norm.iter().enumerate() {
            for &e2 in &norm[x + 1..] {
                if interleaved(e1, e2) {
                    return Err(Error::InvalidChordedCycle(format!(
                        "chords {e1:?} and {e2:?} cross"
                    )));
                }
            }
        }
        Ok(ChordedCycle { n, chords: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.chords.len()
    }

    /// Chords as `(u, w)` with `u < w`.
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Cycle edges followed by chords.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .map(|u| (u, (u + 1) % n))
            .chain(self.chords.iter().copied())
            .collect()
    }
}

/// Endpoints of normalized chords strictly interleave.
fn interleaved((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Map a two-chord cycle onto the two-chord host by a rotation.
///
/// The shorter of the two gaps between the chords runs from `u` to `v` with
/// length `d`; `(a, b)` is the lexicographically first pair of star centers
/// with `b - a = d`, and `w ↦ w - u + a (mod n)` sends both `u` and `v` to star
/// centers, so both chords land on star edges.
pub fn embed_twochord(host: &ConvexHost, g: &ChordedCycle) -> Result<Embedding> {
    if g.h() != 2 {
        return Err(Error::NotTwoChord);
    }
    let n = g.n();
    if host.n() != n {
        return Err(Error::SizeMismatch {
            expected: host.n(),
            got: n,
        });
    }
    if host.kind() != ConvexKind::TwoChord {
        return Err(Error::PreconditionViolated("host is not a two-chord host"));
    }
    let (start, d) = shortest_gap(g);
    let stars = twochord_star_set(n)?;
    let (a, _) = stars
        .iter()
        .flat_map(|&a| stars.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| b > a && b - a == d)
        .ok_or(Error::NoRealizingPair(d))?;
    let map = (0..n).map(|w| (w + n - start + a) % n).collect();
    let mut e = Embedding::new(host.descriptor(), map);
    e.provenance.push(Step {
        case: CaseLabel::TwoChord,
        interval: Interval::new(0, n - 1)?,
    });
    Ok(e)
}

/// Start and length of the shortest arc between endpoints of different chords,
/// first in circular order from the smallest endpoint on ties.
fn shortest_gap(g: &ChordedCycle) -> (usize, usize) {
    let n = g.n();
    let mut ends: Vec<(usize, usize)> = g
        .chords()
        .iter()
        .enumerate()
        .flat_map(|(x, &(u, w))| [(u, x), (w, x)])
        .collect();
    ends.sort_unstable();
    let mut best = (usize::MAX, usize::MAX);
    for i in 0..ends.len() {
        let (p, cp) = ends[i];
        let (q, cq) = ends[(i + 1) % ends.len()];
        if cp != cq {
            let len = (q + n - p) % n;
            if len < best.1 {
                best = (p, len);
            }
        }
    }
    best
}

/// Whether chords `e1` and `e2` of a convex `n`-gon cross.
pub fn convex_edges_cross(n: usize, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
    for &(u, w) in &[e1, e2] {
        if u >= n || w >= n {
            return Err(Error::IndexOutOfRange {
                index: u.max(w),
                bound: n,
            });
        }
        if u == w {
            return Err(Error::DegenerateEdge(u));
        }
    }
    Ok(convex_cross(e1, e2))
}

pub(crate) fn convex_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    interleaved((a.min(b), a.max(b)), (c.min(d), c.max(d)))
}
