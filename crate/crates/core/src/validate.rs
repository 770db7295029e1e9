//! Embedding validation and brute-force universality checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::convex::{convex_cross, ChordedCycle, ConvexHost};
use crate::embedder::{Embedding, HostRef};
use crate::ugraph::UniversalGraph;
use crate::{Error, Result};

/// Stop collecting failures after this many.
pub const MAX_FAILURES: usize = 256;

/// A host whose crossings are decided by vertex indices alone.
pub trait GeometricHost {
    fn vertex_count(&self) -> usize;
    fn contains_edge(&self, u: usize, w: usize) -> bool;
    /// Whether two host edges cross. Edges sharing an endpoint never do.
    fn segments_cross(&self, e1: (usize, usize), e2: (usize, usize)) -> bool;
    fn host_ref(&self) -> HostRef;
}

impl GeometricHost for UniversalGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn contains_edge(&self, u: usize, w: usize) -> bool {
        u < self.n() && w < self.n() && self.has_edge(u, w)
    }

    fn segments_cross(&self, e1: (usize, usize), e2: (usize, usize)) -> bool {
        self.crosses(e1, e2)
    }

    fn host_ref(&self) -> HostRef {
        HostRef::Universal { n: self.n() }
    }
}

impl GeometricHost for ConvexHost {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn contains_edge(&self, u: usize, w: usize) -> bool {
        self.is_edge(u, w)
    }

    fn segments_cross(&self, e1: (usize, usize), e2: (usize, usize)) -> bool {
        convex_cross(e1, e2)
    }

    fn host_ref(&self) -> HostRef {
        self.descriptor()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureKind {
    NotInjective,
    MissingEdge,
    Crossing,
    SizeMismatch,
}

/// One failed check with its witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValidationFailure {
    /// Input vertices `u` and `w` share the host vertex `image`.
    NotInjective { u: usize, w: usize, image: usize },
    /// Input edge `edge` maps to `image`, which is not a host edge (or leaves
    /// the host).
    MissingEdge { edge: (usize, usize), image: (usize, usize) },
    /// Images of two input edges cross.
    Crossing { first: (usize, usize), second: (usize, usize) },
    /// The map does not cover the input, or points outside the host.
    SizeMismatch { expected: usize, got: usize },
}

impl ValidationFailure {
    pub fn kind(&self) -> FailureKind {
        match self {
            ValidationFailure::NotInjective { .. } => FailureKind::NotInjective,
            ValidationFailure::MissingEdge { .. } => FailureKind::MissingEdge,
            ValidationFailure::Crossing { .. } => FailureKind::Crossing,
            ValidationFailure::SizeMismatch { .. } => FailureKind::SizeMismatch,
        }
    }
}

/// Outcome of [`validate_embedding`]; ok exactly when `failures` is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
    /// Set when collection stopped at [`MAX_FAILURES`].
    pub truncated: bool,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn push(&mut self, f: ValidationFailure) -> bool {
        if self.failures.len() >= MAX_FAILURES {
            self.truncated = true;
            return false;
        }
        self.failures.push(f);
        true
    }
}

/// Check that `phi` maps the graph with `n` vertices and `edges` injectively
/// into `host`, onto host edges, without crossings.
///
/// Crossing witnesses are pairs of host edges (images).
pub fn validate_embedding<H: GeometricHost + ?Sized>(
    host: &H,
    n: usize,
    edges: &[(usize, usize)],
    phi: &Embedding,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let hn = host.vertex_count();
    if phi.map.len() != n {
        report.push(ValidationFailure::SizeMismatch {
            expected: n,
            got: phi.map.len(),
        });
        return report;
    }
    if let Some(&bad) = phi.map.iter().find(|&&h| h >= hn) {
        report.push(ValidationFailure::SizeMismatch {
            expected: hn,
            got: bad + 1,
        });
        return report;
    }

    let mut owner = vec![usize::MAX; hn];
    for (v, &h) in phi.map.iter().enumerate() {
        if owner[h] != usize::MAX {
            if !report.push(ValidationFailure::NotInjective {
                u: owner[h],
                w: v,
                image: h,
            }) {
                return report;
            }
        } else {
            owner[h] = v;
        }
    }

    let mut images = Vec::with_capacity(edges.len());
    for &(u, w) in edges {
        if u >= n || w >= n {
            report.push(ValidationFailure::SizeMismatch {
                expected: n,
                got: u.max(w) + 1,
            });
            return report;
        }
        let (a, b) = (phi.map[u], phi.map[w]);
        if a == b || !host.contains_edge(a, b) {
            if !report.push(ValidationFailure::MissingEdge {
                edge: (u, w),
                image: (a, b),
            }) {
                return report;
            }
        } else {
            images.push((a.min(b), a.max(b)));
        }
    }

    // both hosts: segments whose index ranges are disjoint never cross
    images.sort_unstable();
    images.dedup();
    for (x, &e1) in images.iter().enumerate() {
        for &e2 in &images[x + 1..] {
            if e2.0 >= e1.1 {
                break;
            }
            if host.segments_cross(e1, e2)
                && !report.push(ValidationFailure::Crossing {
                    first: e1,
                    second: e2,
                })
            {
                return report;
            }
        }
    }
    report
}

/// Try every rotation and reflection of each member's cycle onto the host's
/// convex order. Returns the first member with no placement that sends all
/// chords onto host edges, or `None` if every member embeds.
pub fn check_universal_convex<'a, I>(host: &ConvexHost, family: I) -> Result<Option<ChordedCycle>>
where
    I: IntoIterator<Item = &'a ChordedCycle>,
{
    if !host.has_spanning_cycle() {
        return Err(Error::NoSpanningCycle);
    }
    let n = host.n();
    for g in family {
        if g.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: g.n(),
            });
        }
        if dihedral_placement(host, g).is_none() {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

/// First dihedral placement `w ↦ ±w + shift (mod n)` that sends every chord
/// of `g` onto a host edge.
pub fn dihedral_placement(host: &ConvexHost, g: &ChordedCycle) -> Option<Vec<usize>> {
    let n = host.n();
    for reflect in [false, true] {
        for shift in 0..n {
            let place = |w: usize| {
                if reflect {
                    (n - w + shift) % n
                } else {
                    (w + shift) % n
                }
            };
            if g.chords().iter().all(|&(u, w)| host.is_edge(place(u), place(w))) {
                return Some((0..n).map(place).collect());
            }
        }
    }
    None
}
