use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in construction, embedding or enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is not below the relevant bound.
    IndexOutOfRange { index: usize, bound: usize },
    /// Two indices that must differ are equal.
    EqualIndices(usize),
    /// A size argument is zero or otherwise unusable.
    InvalidSize(usize),
    /// A size exceeds a configured cap.
    SizeTooLarge { n: usize, cap: usize },
    /// Interval with fewer than two vertices where two are required.
    IntervalTooSmall,
    /// An edge whose endpoints coincide.
    DegenerateEdge(usize),
    /// The named precondition of an operation does not hold.
    PreconditionViolated(&'static str),
    /// An embedding does not live on the interval expected by an isomorphism.
    DomainMismatch,
    /// Cut-vertex threshold outside `1..=size`.
    InvalidS { s: usize, size: usize },
    /// Input and host sizes disagree.
    SizeMismatch { expected: usize, got: usize },
    /// Input edges do not describe a forest.
    InvalidForest(String),
    /// Input tree is not a caterpillar.
    NotACaterpillar,
    /// Input is not a cycle with exactly two disjoint, non-interleaving chords.
    NotTwoChord,
    /// Malformed chorded cycle.
    InvalidChordedCycle(String),
    /// No pair in the star set realizes the chord gap.
    NoRealizingPair(usize),
    /// The convex host lacks an edge of its boundary cycle.
    NoSpanningCycle,
    /// An embedding step broke a guarantee it relies on. Always a defect.
    InternalInvariantBroken(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::EqualIndices(i) => write!(f, "indices must differ (both {i})"),
            Error::InvalidSize(n) => write!(f, "invalid size {n}"),
            Error::SizeTooLarge { n, cap } => write!(f, "size {n} exceeds cap {cap}"),
            Error::IntervalTooSmall => write!(f, "interval needs at least two vertices"),
            Error::DegenerateEdge(v) => write!(f, "degenerate edge at vertex {v}"),
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::DomainMismatch => write!(f, "embedding domain does not match the isomorphism"),
            Error::InvalidS { s, size } => write!(f, "threshold {s} outside 1..={size}"),
            Error::SizeMismatch { expected, got } => {
                write!(f, "size mismatch: expected {expected}, got {got}")
            }
            Error::InvalidForest(why) => write!(f, "not a forest: {why}"),
            Error::NotACaterpillar => write!(f, "input tree is not a caterpillar"),
            Error::NotTwoChord => write!(f, "input is not a cycle with two disjoint chords"),
            Error::InvalidChordedCycle(why) => write!(f, "invalid chorded cycle: {why}"),
            Error::NoRealizingPair(d) => write!(f, "no star pair realizes gap {d}"),
            Error::NoSpanningCycle => write!(f, "host has no spanning boundary cycle"),
            Error::InternalInvariantBroken(why) => write!(f, "internal invariant broken: {why}"),
        }
    }
}

impl core::error::Error for Error {}
