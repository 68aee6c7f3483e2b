use thiserror::Error;

/// Errors surfaced by the quotient, chamber and variation layers.
///
/// The exact linear algebra primitives are total on valid inputs and do not
/// produce errors; everything here is either a violated input invariant or a
/// violated mathematical precondition of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fan generator {index} is not primitive (gcd of coordinates != 1)")]
    NonPrimitiveGenerator { index: usize },

    #[error("fan matrix has rank {rank} < {n}; the rays do not span the quotient space")]
    RankDeficientFan { rank: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("moment value is not in the span of the weights; no lift exists")]
    NoLift,

    #[error("value is not in the interior of a chamber")]
    NotInterior,

    #[error("value does not lie on a wall")]
    NotOnWall,

    #[error("value lies on more than one wall (non-generic position)")]
    NotGeneric,

    #[error("chamber value is not adjacent to the given wall point")]
    NotAdjacent,

    #[error("the two values lie in the same chamber")]
    SameChamber,

    #[error("the two chambers are not adjacent across a single generic wall")]
    NonAdjacentChambers,

    #[error("value lies on a hyperkähler wall; regularity required")]
    SingularAlpha,

    #[error("{d} hyperplanes exceed the sign-sweep cap {cap}")]
    TooManyHyperplanes { d: usize, cap: usize },

    #[error("polytope is not simple: vertex {vertex} has degree {degree}, expected {expected}")]
    NotSimple {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("dimension {dim} too large for this operation (max {max})")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("hyperplane {index} degenerates on the restriction flat")]
    DegenerateRestriction { index: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}
