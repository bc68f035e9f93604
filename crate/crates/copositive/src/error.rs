use num::bigint::BigInt;

/// Errors produced by the exact-arithmetic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {n} exceeds the enumeration limit {limit}")]
    DimensionLimit { n: usize, limit: usize },
    #[error("coordinate {index} lies outside [0, 1]")]
    OutsideBox { index: usize },
    #[error("coordinate {index} is negative")]
    NegativeCoordinate { index: usize },
    #[error("complementarity violated at index {index}: the point is not a KKT point")]
    ComplementarityViolation { index: usize },
    #[error("input is not a feasible complementary solution")]
    NotComplementaryFeasible,
    #[error("no basis recorded for this solution")]
    NoBasisRecorded,
    #[error("matrix is copositive; no certificate exists")]
    CopositiveInput,
    #[error("zero matrix is copositive; no certificate exists")]
    ZeroMatrix,
    #[error("coordinate {index} is not a multiple of 1/{denominator}")]
    OffGrid { index: usize, denominator: BigInt },
    #[error("spacing denominator {denominator} is not a power of two")]
    NotPowerOfTwo { denominator: BigInt },
    #[error("embedding dimension {target} is smaller than the matrix dimension {n}")]
    EmbedDimension { target: usize, n: usize },
    #[error("invalid rational literal {literal:?}")]
    InvalidRational { literal: String },
    #[error("rounded certificate is not negative; the minimizer output is inconsistent")]
    NegativityFailure,
    #[error("purification did not terminate within the support bound")]
    PurificationStalled,
    #[error("entry bound must be at least 1")]
    InvalidEntryBound,
}

pub type Result<T> = std::result::Result<T, Error>;
