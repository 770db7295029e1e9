//! Crossing decisions for host-graph edges.
//!
//! The host graph's vertices sit at `x = i` with y-coordinates that grow so
//! fast that every vertex lies above every line through two lower vertices.
//! Under that placement whether two segments cross depends only on the
//! x-order of the four endpoints and on which of them is highest, so
//! [`edges_cross`] never touches coordinates. [`CoordinateRealization`] builds
//! an actual placement with exact integers; it is only used as an oracle.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::btree::BTreeShape;
use crate::{Error, Result};

/// Decide crossing of `e1` and `e2` from x-order and a height ranking
/// (`rank(i) < rank(j)` iff `i` is higher than `j`).
pub(crate) fn cross_by_rank(
    rank: impl Fn(usize) -> usize,
    e1: (usize, usize),
    e2: (usize, usize),
) -> bool {
    let (mut p, mut q) = (e1.0.min(e1.1), e1.0.max(e1.1));
    let (mut r, mut s) = (e2.0.min(e2.1), e2.0.max(e2.1));
    if p == r || p == s || q == r || q == s {
        return false;
    }
    if r < p {
        core::mem::swap(&mut p, &mut r);
        core::mem::swap(&mut q, &mut s);
    }
    if q < r {
        return false;
    }
    let higher = |a: usize, b: usize| rank(a) < rank(b);
    let top = [p, q, r, s].into_iter().min_by_key(|&v| rank(v)).unwrap();
    if s < q {
        // nested: p < r < s < q
        if top == p || top == q {
            false
        } else if top == r {
            !(higher(s, p) && higher(s, q))
        } else {
            !(higher(r, p) && higher(r, q))
        }
    } else {
        // interleaved: p < r < q < s
        if top == q || top == r {
            false
        } else if top == p {
            !(higher(q, r) && higher(q, s))
        } else {
            !(higher(r, p) && higher(r, q))
        }
    }
}

fn check_edge(bound: usize, e: (usize, usize)) -> Result<()> {
    for v in [e.0, e.1] {
        if v >= bound {
            return Err(Error::IndexOutOfRange { index: v, bound });
        }
    }
    if e.0 == e.1 {
        return Err(Error::DegenerateEdge(e.0));
    }
    Ok(())
}

/// Whether host edges `e1` and `e2` cross in every valid placement of the
/// vertices of `shape`.
pub fn edges_cross(shape: &BTreeShape, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
    check_edge(shape.n(), e1)?;
    check_edge(shape.n(), e2)?;
    Ok(cross_by_rank(
        |i| {
            let (l, p) = shape.locate_unchecked(i);
            BTreeShape::height_rank_at(l, p)
        },
        e1,
        e2,
    ))
}

/// Point with small integer `x` and unbounded `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: i64,
    pub y: BigInt,
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    let det = BigInt::from(b.x - a.x) * (&c.y - &a.y) - (&b.y - &a.y) * BigInt::from(c.x - a.x);
    det.sign_cmp_zero()
}

trait SignCmp {
    fn sign_cmp_zero(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp_zero(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Exact placement of the host vertices: `x(i) = i`, y increasing along the
/// height order, each vertex strictly above every line through two lower ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateRealization {
    points: Vec<Point>,
}

impl CoordinateRealization {
    /// Size cap used by [`CoordinateRealization::realize`].
    pub const DEFAULT_CAP: usize = 63;

    /// Greedy realization for the first `n` vertices of `shape`.
    pub fn realize(shape: &BTreeShape, n: usize) -> Result<Self> {
        Self::realize_with_cap(shape, n, Self::DEFAULT_CAP)
    }

    pub fn realize_with_cap(shape: &BTreeShape, n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(0));
        }
        if n > cap {
            return Err(Error::SizeTooLarge { n, cap });
        }
        if n > shape.m() {
            return Err(Error::IndexOutOfRange {
                index: n - 1,
                bound: shape.m(),
            });
        }
        let mut order: Vec<(usize, usize)> = (0..n)
            .map(|i| {
                let (l, p) = shape.locate_unchecked(i);
                (BTreeShape::height_rank_at(l, p), i)
            })
            .collect();
        // lowest first
        order.sort_unstable_by(|a, b| b.cmp(a));

        let mut ys: Vec<Option<BigInt>> = alloc::vec![None; n];
        let mut placed: Vec<(i64, BigInt)> = Vec::with_capacity(n);
        for &(_, v) in &order {
            let x = v as i64;
            let mut y = match placed.last() {
                Some((_, top)) => top + 1,
                None => BigInt::zero(),
            };
            for (ai, (xa, ya)) in placed.iter().enumerate() {
                for (xb, yb) in &placed[ai + 1..] {
                    // line value at x is num / den
                    let mut den = BigInt::from(xb - xa);
                    let mut num = ya * &den + (yb - ya) * BigInt::from(x - xa);
                    if den.is_negative() {
                        den = -den;
                        num = -num;
                    }
                    let above = num.div_floor(&den) + 1;
                    if above > y {
                        y = above;
                    }
                }
            }
            placed.push((x, y.clone()));
            ys[v] = Some(y);
        }
        let points = ys
            .into_iter()
            .enumerate()
            .map(|(i, y)| Point {
                x: i as i64,
                y: y.expect("every vertex placed"),
            })
            .collect();
        Ok(CoordinateRealization { points })
    }

    pub fn from_points(points: Vec<Point>) -> Self {
        CoordinateRealization { points }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Check the three placement invariants against `shape`: y-order equals
    /// the height order, every vertex is strictly above every line through two
    /// lower vertices, no three points are collinear. Returns the first
    /// offending triple of indices.
    pub fn check_invariants(&self, shape: &BTreeShape) -> core::result::Result<(), [usize; 3]> {
        let n = self.points.len();
        for u in 0..n {
            if self.points[u].x != u as i64 {
                return Err([u, u, u]);
            }
            for w in u + 1..n {
                let hi = shape.higher(u, w).unwrap_or(false);
                if hi != (self.points[u].y > self.points[w].y) {
                    return Err([u, w, w]);
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let (pa, pb, pc) = (&self.points[a], &self.points[b], &self.points[c]);
                    if orientation(pa, pb, pc) == Ordering::Equal {
                        return Err([a, b, c]);
                    }
                    // the highest of the three must be above the line through the others
                    let mut tri = [(pa, a), (pb, b), (pc, c)];
                    tri.sort_by(|l, r| l.0.y.cmp(&r.0.y));
                    let [(lo1, _), (lo2, _), (top, t)] = tri;
                    let (left, right) = if lo1.x < lo2.x { (lo1, lo2) } else { (lo2, lo1) };
                    if orientation(left, right, top) != Ordering::Greater {
                        return Err([a, b, t]);
                    }
                }
            }
        }
        Ok(())
    }

    fn check_edge(&self, e: (usize, usize)) -> Result<()> {
        for v in [e.0, e.1] {
            if v >= self.points.len() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    bound: self.points.len(),
                });
            }
        }
        Ok(())
    }

    /// Whether the segments meet in a point interior to both.
    pub fn segments_cross_exact(&self, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
        self.check_edge(e1)?;
        self.check_edge(e2)?;
        if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
            return Ok(false);
        }
        let (a, b) = (self.point(e1.0), self.point(e1.1));
        let (c, d) = (self.point(e2.0), self.point(e2.1));
        let o1 = orientation(a, b, c);
        let o2 = orientation(a, b, d);
        let o3 = orientation(c, d, a);
        let o4 = orientation(c, d, b);
        let opposite = |x: Ordering, y: Ordering| {
            matches!(
                (x, y),
                (Ordering::Less, Ordering::Greater) | (Ordering::Greater, Ordering::Less)
            )
        };
        Ok(opposite(o1, o2) && opposite(o3, o4))
    }
}

/// Which quarter-plane above a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Above and to the left.
    Left,
    /// Above and to the right.
    Right,
}

/// Open quarter-plane above `apex`, on the given side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuarterPlane {
    pub apex: usize,
    pub side: Side,
}

impl QuarterPlane {
    pub fn left(apex: usize) -> Self {
        QuarterPlane {
            apex,
            side: Side::Left,
        }
    }

    pub fn right(apex: usize) -> Self {
        QuarterPlane {
            apex,
            side: Side::Right,
        }
    }

    fn x_side_ok(&self, q: usize) -> bool {
        match self.side {
            Side::Left => q < self.apex,
            Side::Right => q > self.apex,
        }
    }

    /// Vertex membership from x-order and the height order alone.
    pub fn contains_vertex(&self, shape: &BTreeShape, q: usize) -> Result<bool> {
        if q == self.apex {
            shape.locate(q)?;
            return Ok(false);
        }
        Ok(self.x_side_ok(q) && shape.higher(q, self.apex)?)
    }

    /// Vertex membership on realized coordinates.
    pub fn contains_point(&self, coords: &CoordinateRealization, q: usize) -> bool {
        let (p, pt) = (coords.point(self.apex), coords.point(q));
        let x_ok = match self.side {
            Side::Left => pt.x < p.x,
            Side::Right => pt.x > p.x,
        };
        x_ok && pt.y > p.y
    }

    /// Whether the closed segment between vertices `a` and `b` meets the open
    /// quarter-plane, decided exactly.
    pub fn meets_segment(&self, coords: &CoordinateRealization, a: usize, b: usize) -> bool {
        let p = coords.point(self.apex);
        let (pa, pb) = (coords.point(a), coords.point(b));
        // Parametrize t in [0, 1]; both constraints are linear in t, so each
        // admits a sub-interval of [0, 1]. Work with sign-adjusted x so that
        // the x-constraint reads "x'(t) < x'(p)".
        let flip = matches!(self.side, Side::Right);
        let xs = |pt: &Point| BigInt::from(if flip { -pt.x } else { pt.x });
        let x_set = lt_set(&(xs(pa) - xs(p)), &(xs(pb) - xs(p)));
        let y_set = lt_set(&(&p.y - &pa.y), &(&p.y - &pb.y));
        x_set.meets(&y_set)
    }
}

/// Subset `{t in [0,1] : f(t) < 0}` for `f` linear with `f(0) = f0`,
/// `f(1) = f1`. Thresholds are rationals `num / den` with `den > 0`.
#[derive(Debug, Clone)]
enum TSet {
    Empty,
    All,
    /// `[0, tau)`
    Below(BigInt, BigInt),
    /// `(tau, 1]`
    Above(BigInt, BigInt),
}

fn lt_set(f0: &BigInt, f1: &BigInt) -> TSet {
    let neg0 = f0.is_negative();
    let neg1 = f1.is_negative();
    match (neg0, neg1) {
        (true, true) => TSet::All,
        (false, false) => TSet::Empty,
        // root tau = f0 / (f0 - f1)
        (true, false) => TSet::Below(-f0, f1 - f0),
        (false, true) => TSet::Above(f0.clone(), f0 - f1),
    }
}

impl TSet {
    fn meets(&self, other: &TSet) -> bool {
        use TSet::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => false,
            (All, _) | (_, All) => true,
            (Below(..), Below(..)) | (Above(..), Above(..)) => true,
            (Below(bn, bd), Above(an, ad)) | (Above(an, ad), Below(bn, bd)) => {
                // [0, b) meets (a, 1] iff a < b
                an * bd < bn * ad
            }
        }
    }
}
