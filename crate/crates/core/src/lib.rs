//! Sparse universal geometric graphs.
//!
//! This crate builds host graphs whose straight-line drawings contain a
//! crossing-free copy of every graph in a target family, and it embeds
//! concrete inputs into them:
//!
//! - [`ugraph::UniversalGraph`]: `O(n log n)` edges, universal for all
//!   `n`-vertex forests. Vertices sit at preorder x-ranks of a complete binary
//!   tree with steeply increasing y-coordinates. [`embedder`] computes the
//!   embeddings.
//! - [`convex::ConvexHost`]: convex-position hosts for caterpillars and for
//!   cycles with two disjoint chords.
//!
//! Crossing decisions are combinatorial (x-order plus the height order of the
//! binary tree, see [`geometry::edges_cross`]); an exact big-integer
//! coordinate realization ([`geometry::CoordinateRealization`]) serves as an
//! independent oracle at small sizes. [`validate`] and [`enumerate`] provide
//! the verification side: an embedding validator, universality checks and
//! exhaustive enumerators for small forests, caterpillars and chorded cycles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod btree;
pub mod convex;
pub mod embedder;
pub mod enumerate;
mod error;
pub mod geometry;
pub mod tree;
pub mod ugraph;
pub mod validate;

pub use btree::{BTreeShape, NodeInfo};
pub use convex::{Caterpillar, ChordedCycle, ConvexHost, ConvexKind, PiSequence};
pub use embedder::{CaseLabel, CrossingIso, Embedding, HostRef, Portals, ReturnRecord, Step};
pub use error::Error;
pub use geometry::{CoordinateRealization, QuarterPlane, Side};
pub use tree::{Forest, RootedTree};
pub use ugraph::{Interval, UniversalGraph};
pub use validate::{FailureKind, GeometricHost, ValidationFailure, ValidationReport};

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
