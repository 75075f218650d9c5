use thiserror::Error;

/// Errors produced by the diamond algebra, the series engine and the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("negative dimension {value} at ({p},{q})")]
    NegativeDimension { p: u32, q: u32, value: i64 },

    #[error("duplicate entry at ({p},{q})")]
    DuplicateEntry { p: u32, q: u32 },

    #[error("entry ({p},{q}) lies outside a diamond of complex dimension {dim}")]
    OutOfBounds { p: u32, q: u32, dim: u32 },

    #[error("operation requires a diamond with a complex dimension")]
    MissingDimension,

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("shift by {shift} moves ({p},{q}) to a negative index")]
    NegativeIndex { p: u32, q: u32, shift: i32 },

    #[error("symmetric and exterior powers need even total degree, found ({p},{q})")]
    OddSupport { p: u32, q: u32 },

    #[error("complex dimension {0} is odd; a hyperkähler manifold has even complex dimension")]
    OddComplexDimension(u32),

    #[error("Betti vector of complex dimension {dim} needs {expected} entries, got {found}")]
    BettiLength { dim: u32, expected: usize, found: usize },

    #[error("no nonnegative integral Betti numbers for b0={b0}, b2={b2}, chi={chi}")]
    NoIntegralSolution { b0: i64, b2: i64, chi: i64 },

    #[error("invariant dimension {invariant} exceeds total {total} at ({p},{q})")]
    InvariantExceedsTotal { p: u32, q: u32, invariant: u64, total: u64 },

    #[error("series truncation bounds differ: {left:?} vs {right:?}")]
    BoundsMismatch { left: (u32, u32), right: (u32, u32) },

    #[error("factor monomial has no positive exponent")]
    DegenerateFactor,

    #[error("n = {n} exceeds the configured cap {max}")]
    TruncationExceeded { n: u32, max: u32 },

    #[error("unknown surface kind {0:?}")]
    UnknownSurface(String),

    #[error("expected complex dimension {expected}, found {found:?}")]
    DimensionMismatch { expected: u32, found: Option<u32> },

    #[error("b2 = {0} leaves no room for the invariant/anti-invariant split")]
    InvalidSecondBetti(i64),

    #[error("no decomposition is available in weight {0}")]
    UnsupportedWeight(u32),

    #[error("table is not supported in total degree {expected}")]
    WrongSupport { expected: u32 },

    #[error("subtracting {correction} at ({p},{q}) from {value} gives a negative dimension")]
    NegativeAfterCorrection { p: u32, q: u32, value: u64, correction: u64 },

    #[error("duality completion conflicts at ({p},{q}): {found} vs mirror {mirror}")]
    DualityConflict { p: u32, q: u32, found: u64, mirror: u64 },

    #[error("internal consistency violated: {0}")]
    Inconsistent(String),

    #[error("cross-validation failed for {quantity}: pipeline {pipeline}, independent route {independent}")]
    CrossValidation { quantity: &'static str, pipeline: u64, independent: u64 },

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl HodgeError {
    /// True when the error stems from an internal invariant rather than from
    /// caller-supplied data.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            HodgeError::Inconsistent(_)
                | HodgeError::CrossValidation { .. }
                | HodgeError::DualityConflict { .. }
                | HodgeError::NegativeAfterCorrection { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, HodgeError>;
