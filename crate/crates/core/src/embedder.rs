//! Crossing-free embedding of forests into the universal host graph.
//!
//! The recursion works on a tree `T`, an interval `G[i, j]` with
//! `|T| = j - i + 1`, and one or two portals (tree vertices that may have
//! neighbors outside `T`). With one portal `a` the result maps `a` to the
//! highest vertex of the interval; with two portals `a`, `b` the result maps
//! `a` left of `b` and keeps the quarter-planes above-left of `a` and
//! above-right of `b` empty. Every step records a [`Step`] so the case
//! sequence of a run can be audited afterwards.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::convex::ConvexKind;
use crate::tree::{Forest, RootedTree};
use crate::ugraph::{Interval, UniversalGraph};
use crate::{Error, Result};

/// Which host an [`Embedding`] targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HostRef {
    Universal { n: usize },
    Convex { n: usize, kind: ConvexKind },
}

/// Recursion case that produced part of an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// Single vertex.
    Base,
    /// Portal with at least two children.
    Case1_1,
    /// Portal is a leaf, highest vertex at the right end.
    Case1_2_1,
    /// Portal is a leaf, highest vertex at the left end.
    Case1_2_2,
    /// Left sibling of the highest vertex is the left end.
    Case1_2_3,
    /// Right child of the highest vertex outside the interval.
    Case1_2_4,
    /// Right child inside, cut subtree avoids the highest vertex.
    Case1_2_5_1,
    /// Right child inside, cut subtree spans the highest vertex.
    Case1_2_5_2,
    /// Two portals.
    Case2,
    /// Transfer through a crossing-isomorphism.
    Transfer,
    /// Highest vertex replaced by an outside vertex.
    Replace,
    /// Caterpillar layout on a convex host.
    Caterpillar,
    /// Rotation of a two-chord cycle onto a convex host.
    TwoChord,
}

/// One recursion record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub case: CaseLabel,
    pub interval: Interval,
}

/// Injective map from input vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub target: HostRef,
    pub map: Vec<usize>,
    pub provenance: Vec<Step>,
}

impl Embedding {
    pub fn new(target: HostRef, map: Vec<usize>) -> Self {
        Embedding {
            target,
            map,
            provenance: Vec::new(),
        }
    }

    /// Host vertex of input vertex `v`.
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Whether the image is exactly the vertex set of `iv`.
    fn covers_exactly(&self, iv: Interval) -> bool {
        if self.map.len() != iv.len() {
            return false;
        }
        let mut seen = vec![false; iv.len()];
        for &h in &self.map {
            if !iv.contains(h) || seen[h - iv.lo] {
                return false;
            }
            seen[h - iv.lo] = true;
        }
        true
    }
}

/// Portals handed to [`embed_tree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Portals {
    One(usize),
    Two(usize, usize),
}

/// Order-preserving bijection from `G(source) - removed` onto `G(target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingIso {
    pub source: Interval,
    pub removed: usize,
    pub target: Interval,
}

impl CrossingIso {
    /// Image of a source vertex other than `removed`.
    pub fn forward(&self, u: usize) -> usize {
        let rank = if u < self.removed {
            u - self.source.lo
        } else {
            u - self.source.lo - 1
        };
        self.target.lo + rank
    }

    /// Preimage of a target vertex.
    pub fn backward(&self, w: usize) -> usize {
        let u = self.source.lo + (w - self.target.lo);
        if u < self.removed {
            u
        } else {
            u + 1
        }
    }

    /// Source vertices in x-order.
    pub fn source_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.source.iter().filter(move |&u| u != self.removed)
    }

    /// Exhaustively check that the map preserves edges, crossings and the
    /// highest vertex in both directions. Returns the first violated property.
    pub fn verify(&self, g: &UniversalGraph) -> core::result::Result<(), &'static str> {
        let src: Vec<usize> = self.source_vertices().collect();
        if src.len() != self.target.len() {
            return Err("sizes differ");
        }
        let mut edges = Vec::new();
        for (x, &u) in src.iter().enumerate() {
            for &w in &src[x + 1..] {
                let here = g.has_edge(u, w);
                if here != g.has_edge(self.forward(u), self.forward(w)) {
                    return Err("edge preservation");
                }
                if here {
                    edges.push((u, w));
                }
            }
        }
        for (x, &e1) in edges.iter().enumerate() {
            for &e2 in &edges[x + 1..] {
                let f1 = (self.forward(e1.0), self.forward(e1.1));
                let f2 = (self.forward(e2.0), self.forward(e2.1));
                if g.crosses(e1, e2) != g.crosses(f1, f2) {
                    return Err("crossing preservation");
                }
            }
        }
        let top = src
            .iter()
            .copied()
            .reduce(|best, u| if g.is_higher(u, best) { u } else { best })
            .expect("non-empty source");
        if self.forward(top) != g.highest(self.target) {
            return Err("highest vertex");
        }
        Ok(())
    }
}

/// Interval crossing-isomorphic to `G(I) - v_k`, where `k` is the highest
/// vertex of `I`.
///
/// If `k` is an end of `I` the remainder is itself an interval and the
/// identity is returned. Otherwise the remainder is shifted left by
/// `D = |B(k + 1)|` and loses one more slot: `[lo - D, hi - D - 1]`. That
/// requires `I` to contain neither the right child of `k` nor a descendant of
/// the left child of `k`'s left sibling.
pub fn iso_interval(g: &UniversalGraph, iv: Interval, k: usize) -> Result<(Interval, CrossingIso)> {
    if iv.hi >= g.n() {
        return Err(Error::IndexOutOfRange {
            index: iv.hi,
            bound: g.n(),
        });
    }
    if !iv.contains(k) {
        return Err(Error::PreconditionViolated("k lies outside the interval"));
    }
    if iv.len() < 2 {
        return Err(Error::IntervalTooSmall);
    }
    let iso = |target: Interval| CrossingIso {
        source: iv,
        removed: k,
        target,
    };
    if k == iv.lo {
        let t = Interval::new(iv.lo + 1, iv.hi)?;
        return Ok((t, iso(t)));
    }
    if k == iv.hi {
        let t = Interval::new(iv.lo, iv.hi - 1)?;
        return Ok((t, iso(t)));
    }
    if g.highest(iv) != k {
        return Err(Error::PreconditionViolated("k is not the highest vertex"));
    }
    let info = g.nav(k);
    let right_child = info
        .right_child
        .ok_or(Error::PreconditionViolated("highest interior vertex is a leaf"))?;
    if iv.contains(right_child) {
        return Err(Error::PreconditionViolated("interval contains the right child of k"));
    }
    // k - 1 is inside and lower than k, so k is a right child
    if info.pos.is_multiple_of(2) {
        return Err(Error::PreconditionViolated("k has no left sibling"));
    }
    let sibling = info.left_level_neighbor.expect("right child has a left sibling");
    let d = g.shape().subtree_size_at(info.level + 1);
    // descendants of the sibling's left child occupy [sibling + 1, sibling + d]
    if iv.lo <= sibling + d {
        return Err(Error::PreconditionViolated(
            "interval contains a descendant of the left child of k's left sibling",
        ));
    }
    let t = Interval::new(iv.lo - d, iv.hi - d - 1)?;
    Ok((t, iso(t)))
}

/// Pull an embedding on `iso.target` back to `G(iso.source) - removed`.
pub fn transfer_via_isomorphism(iso: &CrossingIso, phi: &Embedding) -> Result<Embedding> {
    if !phi.covers_exactly(iso.target) {
        return Err(Error::DomainMismatch);
    }
    let mut provenance = phi.provenance.clone();
    provenance.push(Step {
        case: CaseLabel::Transfer,
        interval: iso.source,
    });
    Ok(Embedding {
        target: phi.target,
        map: phi.map.iter().map(|&w| iso.backward(w)).collect(),
        provenance,
    })
}

/// Move the tree vertex sitting on the highest vertex of `G(I)` to `x`, a
/// vertex outside `I` that is higher than everything else in `I`.
///
/// The result has no crossings. Edges at `x` are not guaranteed: `x` must be
/// adjacent to the images of the moved vertex's neighbors, which callers
/// ensure by their choice of `x`.
pub fn replace_highest(
    g: &UniversalGraph,
    iv: Interval,
    phi: &Embedding,
    x: usize,
) -> Result<Embedding> {
    if iv.hi >= g.n() || x >= g.n() {
        return Err(Error::IndexOutOfRange {
            index: iv.hi.max(x),
            bound: g.n(),
        });
    }
    if !phi.covers_exactly(iv) {
        return Err(Error::DomainMismatch);
    }
    if iv.contains(x) {
        return Err(Error::PreconditionViolated("replacement vertex lies inside the interval"));
    }
    let k = g.highest(iv);
    if iv.iter().any(|w| w != k && !g.is_higher(x, w)) {
        return Err(Error::PreconditionViolated(
            "replacement vertex is not higher than the rest of the interval",
        ));
    }
    let mut provenance = phi.provenance.clone();
    provenance.push(Step {
        case: CaseLabel::Replace,
        interval: iv,
    });
    Ok(Embedding {
        target: phi.target,
        map: phi.map.iter().map(|&h| if h == k { x } else { h }).collect(),
        provenance,
    })
}

/// Embed the tree `t` onto `G(iv)` with the given portals.
pub fn embed_tree(
    g: &UniversalGraph,
    t: &RootedTree,
    portals: Portals,
    iv: Interval,
) -> Result<Embedding> {
    if iv.hi >= g.n() {
        return Err(Error::IndexOutOfRange {
            index: iv.hi,
            bound: g.n(),
        });
    }
    if t.len() != iv.len() {
        return Err(Error::SizeMismatch {
            expected: iv.len(),
            got: t.len(),
        });
    }
    let piece = Piece {
        adj: t.adjacency(),
    };
    let mut run = Run::new(g);
    let map = match portals {
        Portals::One(a) => {
            check_vertex(a, t.len())?;
            run.one(&piece, a, iv)?
        }
        Portals::Two(a, b) => {
            check_vertex(a, t.len())?;
            check_vertex(b, t.len())?;
            if a == b {
                return Err(Error::PreconditionViolated("portals must be distinct"));
            }
            run.two(&piece, a, b, iv)?
        }
    };
    Ok(Embedding {
        target: HostRef::Universal { n: g.n() },
        map,
        provenance: run.steps,
    })
}

fn check_vertex(v: usize, len: usize) -> Result<()> {
    if v >= len {
        Err(Error::IndexOutOfRange { index: v, bound: len })
    } else {
        Ok(())
    }
}

/// Snapshot of one recursive return, in host vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnRecord {
    pub interval: Interval,
    /// Images of the portals.
    pub portals: Portals,
    /// Image of the unique neighbor of a single portal of degree one.
    pub portal_neighbor: Option<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Embed a forest on `n = |V(G)|` vertices into `G`.
///
/// Components, ordered by lowest vertex id, take consecutive intervals from
/// the left; each is embedded with its lowest vertex as the single portal.
pub fn embed_forest(g: &UniversalGraph, f: &Forest) -> Result<Embedding> {
    forest_run(g, f, false).map(|(e, _)| e)
}

/// [`embed_forest`] that also returns a record of every recursive return.
pub fn embed_forest_audited(
    g: &UniversalGraph,
    f: &Forest,
) -> Result<(Embedding, Vec<ReturnRecord>)> {
    forest_run(g, f, true)
}

fn forest_run(
    g: &UniversalGraph,
    f: &Forest,
    audit: bool,
) -> Result<(Embedding, Vec<ReturnRecord>)> {
    if f.n() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: f.n(),
        });
    }
    let adj = f.adjacency();
    let mut local = vec![usize::MAX; f.n()];
    let mut map = vec![usize::MAX; f.n()];
    let mut run = Run::new(g);
    if audit {
        run.records = Some(Vec::new());
    }
    let mut cursor = 0;
    for comp in f.components() {
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let piece = Piece {
            adj: comp
                .iter()
                .map(|&v| adj[v].iter().map(|&w| local[w]).collect())
                .collect(),
        };
        let iv = Interval::new(cursor, cursor + comp.len() - 1)?;
        let sub = run.one(&piece, 0, iv)?;
        for (i, &v) in comp.iter().enumerate() {
            map[v] = sub[i];
        }
        cursor += comp.len();
    }
    let records = run.records.take().unwrap_or_default();
    Ok((
        Embedding {
            target: HostRef::Universal { n: g.n() },
            map,
            provenance: run.steps,
        },
        records,
    ))
}

/// A subtree under construction: adjacency over local ids `0..len`.
struct Piece {
    adj: Vec<Vec<usize>>,
}

impl Piece {
    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Induced piece on `members` (connected); member `i` becomes local `i`.
    fn extract(&self, members: &[usize]) -> Piece {
        let mut local = vec![usize::MAX; self.len()];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        Piece {
            adj: members
                .iter()
                .map(|&v| {
                    self.adj[v]
                        .iter()
                        .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Rooted view of a piece with preorder positions.
struct Rooted {
    tree: RootedTree,
    pre_index: Vec<usize>,
}

impl Rooted {
    fn new(piece: &Piece, root: usize) -> Result<Self> {
        let tree = RootedTree::from_adjacency(&piece.adj, root)?;
        let mut pre_index = vec![0; tree.len()];
        for (i, &v) in tree.preorder().iter().enumerate() {
            pre_index[v] = i;
        }
        Ok(Rooted { tree, pre_index })
    }

    /// Subtree of `v` in preorder, starting with `v`.
    fn subtree(&self, v: usize) -> &[usize] {
        let start = self.pre_index[v];
        &self.tree.preorder()[start..start + self.tree.size(v)]
    }

    /// Everything except the root and the subtree of `c`, in preorder.
    fn below_root_without(&self, c: usize) -> Vec<usize> {
        let start = self.pre_index[c];
        let end = start + self.tree.size(c);
        let pre = self.tree.preorder();
        pre[1..start].iter().chain(&pre[end..]).copied().collect()
    }
}

fn broken(msg: String) -> Error {
    Error::InternalInvariantBroken(msg)
}

fn interval_of(positions: &[usize]) -> Result<Interval> {
    let lo = *positions.iter().min().expect("non-empty block");
    let hi = *positions.iter().max().expect("non-empty block");
    if hi - lo + 1 != positions.len() {
        return Err(broken(format!("block {positions:?} is not contiguous")));
    }
    Interval::new(lo, hi)
}

/// Consecutive blocks of `positions` with the given sizes.
fn blocks(positions: &[usize], sizes: impl Iterator<Item = usize>) -> Vec<&[usize]> {
    let mut out = Vec::new();
    let mut start = 0;
    for s in sizes {
        out.push(&positions[start..start + s]);
        start += s;
    }
    out
}

struct Run<'g> {
    g: &'g UniversalGraph,
    steps: Vec<Step>,
    records: Option<Vec<ReturnRecord>>,
}

impl<'g> Run<'g> {
    fn new(g: &'g UniversalGraph) -> Self {
        Run {
            g,
            steps: Vec::new(),
            records: None,
        }
    }

    fn record(&mut self, piece: &Piece, portals: Portals, iv: Interval, map: &[usize]) {
        let Some(records) = self.records.as_mut() else {
            return;
        };
        let mut edges = Vec::new();
        for (u, nb) in piece.adj.iter().enumerate() {
            for &w in nb {
                if u < w {
                    edges.push((map[u], map[w]));
                }
            }
        }
        let (portals, portal_neighbor) = match portals {
            Portals::One(a) => (
                Portals::One(map[a]),
                (piece.adj[a].len() == 1).then(|| map[piece.adj[a][0]]),
            ),
            Portals::Two(a, b) => (Portals::Two(map[a], map[b]), None),
        };
        records.push(ReturnRecord {
            interval: iv,
            portals,
            portal_neighbor,
            vertices: map.to_vec(),
            edges,
        });
    }

    /// Recurse on `members` of `piece` with one portal (a member) and write
    /// the result into `map`.
    fn sub_one(
        &mut self,
        piece: &Piece,
        members: &[usize],
        portal: usize,
        iv: Interval,
        map: &mut [usize],
    ) -> Result<()> {
        let sub = piece.extract(members);
        let at = members.iter().position(|&v| v == portal).expect("portal is a member");
        let res = self.one(&sub, at, iv)?;
        for (i, &v) in members.iter().enumerate() {
            map[v] = res[i];
        }
        Ok(())
    }

    /// Embed `members` (rooted at `a`, which is members[0]) with portals `a`
    /// and `b`; `a == b` degrades to a single portal, which gives both
    /// quarter-plane guarantees at once.
    fn sub_portals(
        &mut self,
        piece: &Piece,
        members: &[usize],
        a: usize,
        b: usize,
        iv: Interval,
        map: &mut [usize],
    ) -> Result<()> {
        if a == b {
            return self.sub_one(piece, members, a, iv, map);
        }
        let sub = piece.extract(members);
        let la = members.iter().position(|&v| v == a).expect("portal is a member");
        let lb = members.iter().position(|&v| v == b).expect("portal is a member");
        let res = self.two(&sub, la, lb, iv)?;
        for (i, &v) in members.iter().enumerate() {
            map[v] = res[i];
        }
        Ok(())
    }

    fn one(&mut self, piece: &Piece, a: usize, iv: Interval) -> Result<Vec<usize>> {
        let h = piece.len();
        if h != iv.len() {
            return Err(broken(format!("tree of size {h} on interval {iv}")));
        }
        if h == 1 {
            self.steps.push(Step {
                case: CaseLabel::Base,
                interval: iv,
            });
            self.record(piece, Portals::One(a), iv, &[iv.lo]);
            return Ok(vec![iv.lo]);
        }
        let g = self.g;
        let k = g.highest(iv);
        let rt = Rooted::new(piece, a)?;
        let mut map = vec![usize::MAX; h];
        let kids = rt.tree.children(a);

        if kids.len() >= 2 {
            self.steps.push(Step {
                case: CaseLabel::Case1_1,
                interval: iv,
            });
            let positions: Vec<usize> = iv.iter().filter(|&x| x != k).collect();
            let parts = blocks(&positions, kids.iter().map(|&c| rt.tree.size(c)));
            let anchor = if k > iv.lo { k - 1 } else { k + 1 };
            let q = parts
                .iter()
                .position(|b| b.contains(&anchor))
                .ok_or_else(|| broken("no block next to the highest vertex".into()))?;
            for (x, part) in parts.iter().enumerate() {
                let c = kids[x];
                if x == q {
                    let mut members = vec![a];
                    members.extend_from_slice(rt.subtree(c));
                    let mut slots = part.to_vec();
                    slots.push(k);
                    self.sub_one(piece, &members, a, interval_of(&slots)?, &mut map)?;
                } else {
                    self.sub_one(piece, rt.subtree(c), c, interval_of(part)?, &mut map)?;
                }
            }
        } else {
            let a1 = kids[0];
            let rest: Vec<usize> = rt.tree.preorder()[1..].to_vec();
            let info = g.nav(k);
            let left_sibling = (info.pos % 2 == 1)
                .then_some(info.left_level_neighbor)
                .flatten();
            if k == iv.hi {
                self.steps.push(Step {
                    case: CaseLabel::Case1_2_1,
                    interval: iv,
                });
                self.sub_one(piece, &rest, a1, Interval::new(iv.lo, k - 1)?, &mut map)?;
            } else if k == iv.lo {
                self.steps.push(Step {
                    case: CaseLabel::Case1_2_2,
                    interval: iv,
                });
                self.sub_one(piece, &rest, a1, Interval::new(k + 1, iv.hi)?, &mut map)?;
            } else if let Some(sib) = left_sibling.filter(|&l| l >= iv.lo) {
                self.steps.push(Step {
                    case: CaseLabel::Case1_2_3,
                    interval: iv,
                });
                if sib != iv.lo {
                    return Err(broken(format!("left sibling {sib} inside {iv} but not at its start")));
                }
                let inner = Interval::new(iv.lo + 1, iv.hi)?;
                self.sub_one(piece, &rest, a1, inner, &mut map)?;
                if map[a1] != k {
                    return Err(broken(format!("portal not on highest vertex of {inner}")));
                }
                map[a1] = iv.lo;
                self.steps.push(Step {
                    case: CaseLabel::Replace,
                    interval: inner,
                });
            } else {
                let r = info
                    .right_child
                    .ok_or_else(|| broken(format!("interior highest vertex {k} is a leaf")))?;
                if r > iv.hi {
                    self.case_1_2_4(piece, &rt, a, iv, k, &mut map)?;
                } else {
                    self.case_1_2_5(piece, &rt, a, iv, k, r, &mut map)?;
                }
            }
        }
        map[a] = k;
        if map.contains(&usize::MAX) {
            return Err(broken(format!("unmapped vertex on {iv}")));
        }
        self.record(piece, Portals::One(a), iv, &map);
        Ok(map)
    }

    fn case_1_2_4(
        &mut self,
        piece: &Piece,
        rt: &Rooted,
        a: usize,
        iv: Interval,
        k: usize,
        map: &mut [usize],
    ) -> Result<()> {
        self.steps.push(Step {
            case: CaseLabel::Case1_2_4,
            interval: iv,
        });
        let a1 = rt.tree.children(a)[0];
        let s = iv.hi - k + 1;
        let c = rt.tree.cut_vertex_from(a1, s);
        let cs = rt.tree.children(c);
        let mut acc = 1;
        let mut ell = None;
        for (x, &d) in cs.iter().enumerate() {
            acc += rt.tree.size(d);
            if acc >= s {
                ell = Some(x);
                break;
            }
        }
        let ell = ell.ok_or_else(|| broken(format!("cut vertex with fewer than {s} vertices")))?;

        let mut h_members = vec![c];
        for &d in &cs[..=ell] {
            h_members.extend_from_slice(rt.subtree(d));
        }
        let m = h_members.len();
        let src = Interval::new(iv.hi - m, iv.hi)?;
        let (target, iso) = iso_interval(self.g, src, k)
            .map_err(|e| broken(format!("case 1.2.4 on {iv}: {e}")))?;
        let sub = piece.extract(&h_members);
        let res = self.one(&sub, 0, target)?;
        for (i, &v) in h_members.iter().enumerate() {
            map[v] = iso.backward(res[i]);
        }
        self.steps.push(Step {
            case: CaseLabel::Transfer,
            interval: src,
        });
        if map[c] != k + 1 {
            return Err(broken(format!("cut vertex not on {} after transfer", k + 1)));
        }

        let others = &cs[ell + 1..];
        let total: usize = others.iter().map(|&d| rt.tree.size(d)).sum();
        let mut cursor = src.lo - total;
        for &d in others {
            let sz = rt.tree.size(d);
            self.sub_one(piece, rt.subtree(d), d, Interval::new(cursor, cursor + sz - 1)?, map)?;
            cursor += sz;
        }

        if c != a1 {
            let rest = rt.below_root_without(c);
            let cp = rt.tree.parent(c).expect("c is below a'");
            let left = Interval::new(iv.lo, src.lo - total - 1)?;
            self.sub_portals(piece, &rest, a1, cp, left, map)?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn case_1_2_5(
        &mut self,
        piece: &Piece,
        rt: &Rooted,
        a: usize,
        iv: Interval,
        k: usize,
        r: usize,
        map: &mut [usize],
    ) -> Result<()> {
        let a1 = rt.tree.children(a)[0];
        let s = iv.hi - r + 1;
        let c = rt.tree.cut_vertex_from(a1, s);
        let m = rt.tree.size(c);
        let cp = rt.tree.parent(c).expect("c is below the portal");

        if m < iv.hi - k {
            self.steps.push(Step {
                case: CaseLabel::Case1_2_5_1,
                interval: iv,
            });
            // c != a' here because |T'| = |I| - 1 > j - k - 1
            let rest = rt.below_root_without(c);
            let left = Interval::new(iv.lo, iv.hi - m - 1)?;
            self.sub_portals(piece, &rest, a1, cp, left, map)?;
            let moved = rest
                .iter()
                .copied()
                .find(|&v| map[v] == k)
                .ok_or_else(|| broken(format!("no vertex on {k} in {left}")))?;
            map[moved] = r;
            self.steps.push(Step {
                case: CaseLabel::Replace,
                interval: left,
            });

            let mut members = vec![cp];
            members.extend_from_slice(rt.subtree(c));
            let sub = piece.extract(&members);
            let right = Interval::new(iv.hi - m, iv.hi)?;
            let res = self.one(&sub, 0, right)?;
            if res[0] != r {
                return Err(broken(format!("parent of cut vertex not on {r}")));
            }
            for (i, &v) in members.iter().enumerate().skip(1) {
                map[v] = res[i];
            }
            return Ok(());
        }

        self.steps.push(Step {
            case: CaseLabel::Case1_2_5_2,
            interval: iv,
        });
        let span = Interval::new(iv.hi - m, iv.hi)?;
        let positions: Vec<usize> = span.iter().filter(|&x| x != k && x != r).collect();
        let cs = rt.tree.children(c);
        let parts = blocks(&positions, cs.iter().map(|&d| rt.tree.size(d)));
        let q = parts
            .iter()
            .position(|b| b.contains(&(r - 1)))
            .ok_or_else(|| broken(format!("no block next to right child {r}")))?;
        let p = parts.iter().position(|b| {
            b.first().is_some_and(|&f| f < k) && b.last().is_some_and(|&l| l > k)
        });
        if p == Some(q) {
            return Err(broken(format!("block at {r} also spans {k}")));
        }
        for (x, part) in parts.iter().enumerate() {
            let d = cs[x];
            if x == q {
                let mut members = vec![c];
                members.extend_from_slice(rt.subtree(d));
                let mut slots = part.to_vec();
                slots.push(r);
                let slot_iv = interval_of(&slots)?;
                self.sub_one(piece, &members, c, slot_iv, map)?;
                if map[c] != r {
                    return Err(broken(format!("cut vertex not on right child {r}")));
                }
            } else if Some(x) == p {
                let mut slots = part.to_vec();
                slots.push(k);
                let around = interval_of(&slots)?;
                let (target, iso) = iso_interval(self.g, around, k)
                    .map_err(|e| broken(format!("case 1.2.5.2 on {iv}: {e}")))?;
                let members = rt.subtree(d);
                let sub = piece.extract(members);
                let res = self.one(&sub, 0, target)?;
                for (i, &v) in members.iter().enumerate() {
                    map[v] = iso.backward(res[i]);
                }
                self.steps.push(Step {
                    case: CaseLabel::Transfer,
                    interval: around,
                });
            } else {
                self.sub_one(piece, rt.subtree(d), d, interval_of(part)?, map)?;
            }
        }
        if c != a1 {
            let rest = rt.below_root_without(c);
            let left = Interval::new(iv.lo, iv.hi - m - 1)?;
            self.sub_portals(piece, &rest, a1, cp, left, map)?;
        }
        Ok(())
    }

    fn two(&mut self, piece: &Piece, a: usize, b: usize, iv: Interval) -> Result<Vec<usize>> {
        let h = piece.len();
        if h != iv.len() {
            return Err(broken(format!("tree of size {h} on interval {iv}")));
        }
        self.steps.push(Step {
            case: CaseLabel::Case2,
            interval: iv,
        });
        let rt = Rooted::new(piece, a)?;
        let mut path = vec![b];
        while let Some(p) = rt.tree.parent(*path.last().unwrap()) {
            path.push(p);
        }
        path.reverse();
        let mut map = vec![usize::MAX; h];
        let mut cursor = iv.lo;
        for (x, &cx) in path.iter().enumerate() {
            let next = path.get(x + 1).copied();
            let mut members = vec![cx];
            for &d in rt.tree.children(cx) {
                if Some(d) != next {
                    members.extend_from_slice(rt.subtree(d));
                }
            }
            let len = members.len();
            self.sub_one(piece, &members, cx, Interval::new(cursor, cursor + len - 1)?, &mut map)?;
            cursor += len;
        }
        if map[a] >= map[b] {
            return Err(broken(format!("left portal not left of right portal on {iv}")));
        }
        self.record(piece, Portals::Two(a, b), iv, &map);
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn iso_interval_examples() {
        let g = UniversalGraph::build(15).unwrap();
        let (t, iso) = iso_interval(&g, iv(4, 6), 5).unwrap();
        assert_eq!(t, iv(3, 4));
        assert_eq!((iso.forward(4), iso.forward(6)), (3, 4));
        assert_eq!((iso.backward(3), iso.backward(4)), (4, 6));

        assert_eq!(iso_interval(&g, iv(0, 3), 0).unwrap().0, iv(1, 3));
        assert_eq!(iso_interval(&g, iv(4, 6), 6).unwrap().0, iv(4, 5));

        // right child of 5 is 7
        assert!(matches!(
            iso_interval(&g, iv(4, 7), 5),
            Err(Error::PreconditionViolated(_))
        ));
        // 3 is the left child of 5's left sibling 2
        assert!(matches!(
            iso_interval(&g, iv(3, 6), 5),
            Err(Error::PreconditionViolated(_))
        ));
        // 4 is not the highest vertex of [3, 6]
        assert!(matches!(
            iso_interval(&g, iv(3, 6), 4),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn transfer_example() {
        let g = UniversalGraph::build(15).unwrap();
        let (_, iso) = iso_interval(&g, iv(4, 6), 5).unwrap();
        let phi = Embedding::new(HostRef::Universal { n: 15 }, vec![4, 3]);
        let moved = transfer_via_isomorphism(&iso, &phi).unwrap();
        assert_eq!(moved.map, [6, 4]);

        let single = Embedding::new(HostRef::Universal { n: 15 }, vec![3]);
        let (_, small) = iso_interval(&g, iv(3, 4), 4).unwrap();
        assert_eq!(transfer_via_isomorphism(&small, &single).unwrap().map, [3]);

        let wrong = Embedding::new(HostRef::Universal { n: 15 }, vec![4, 5]);
        assert_eq!(transfer_via_isomorphism(&iso, &wrong), Err(Error::DomainMismatch));
    }

    #[test]
    fn replace_example() {
        let g = UniversalGraph::build(7).unwrap();
        let phi = Embedding::new(HostRef::Universal { n: 7 }, vec![3, 2]);
        let out = replace_highest(&g, iv(2, 3), &phi, 4).unwrap();
        assert_eq!(out.map, [4, 2]);
        assert!(g.is_edge(4, 2).unwrap());

        let single = Embedding::new(HostRef::Universal { n: 7 }, vec![5]);
        assert_eq!(replace_highest(&g, iv(5, 5), &single, 4).unwrap().map, [4]);

        assert!(matches!(
            replace_highest(&g, iv(2, 3), &phi, 3),
            Err(Error::PreconditionViolated(_))
        ));
        // 6 is lower than 2's... no: 6 is on level 3 right of 2, higher than 2 but 3 is
        // the highest; try a vertex lower than 2
        let phi56 = Embedding::new(HostRef::Universal { n: 7 }, vec![6, 5]);
        assert!(matches!(
            replace_highest(&g, iv(5, 6), &phi56, 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn star_and_single_vertex() {
        let g = UniversalGraph::build(7).unwrap();
        let star = RootedTree::from_edges(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)], 0)
            .unwrap();
        let e = embed_tree(&g, &star, Portals::One(0), iv(0, 6)).unwrap();
        assert_eq!(e.map[0], 0);
        let mut leaves: Vec<usize> = e.map[1..].to_vec();
        leaves.sort_unstable();
        assert_eq!(leaves, [1, 2, 3, 4, 5, 6]);

        let dot = RootedTree::from_edges(1, &[], 0).unwrap();
        let e = embed_tree(&g, &dot, Portals::One(0), iv(4, 4)).unwrap();
        assert_eq!(e.map, [4]);
        assert_eq!(e.provenance[0].case, CaseLabel::Base);
    }

    #[test]
    fn size_mismatch() {
        let g = UniversalGraph::build(7).unwrap();
        let dot = RootedTree::from_edges(1, &[], 0).unwrap();
        assert_eq!(
            embed_tree(&g, &dot, Portals::One(0), iv(0, 1)),
            Err(Error::SizeMismatch { expected: 2, got: 1 })
        );
        assert_eq!(
            embed_forest(&g, &Forest::empty(3)),
            Err(Error::SizeMismatch { expected: 7, got: 3 })
        );
    }

    #[test]
    fn forest_layout() {
        let g = UniversalGraph::build(3).unwrap();
        let e = embed_forest(&g, &Forest::empty(3)).unwrap();
        assert_eq!(e.map, [0, 1, 2]);

        let g = UniversalGraph::build(5).unwrap();
        let f = Forest::new(5, vec![(0, 1), (2, 3), (3, 4)]).unwrap();
        let e = embed_forest(&g, &f).unwrap();
        let mut p2: Vec<usize> = e.map[..2].to_vec();
        p2.sort_unstable();
        assert_eq!(p2, [0, 1]);
        let mut p3: Vec<usize> = e.map[2..].to_vec();
        p3.sort_unstable();
        assert_eq!(p3, [2, 3, 4]);
    }
}
