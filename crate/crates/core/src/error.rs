use thiserror::Error;

/// Errors raised by the algebra, kneading and generating-function layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    ZeroPolynomialDivisor,
    #[error("division by zero rational function")]
    ZeroRationalDivisor,
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("alpha must be in 1..={p}, got {alpha}")]
    AlphaOutOfRange { alpha: usize, p: usize },
    #[error("beta must be ≥ 1")]
    BetaOutOfRange,
    #[error("not expandable at z = 0")]
    NotExpandable,
    #[error("invalid recurrence: {0}")]
    InvalidSpec(String),
    /// The mathematics guarantees exact division by z; hitting this means the
    /// determinant pipeline produced a corrupted value.
    #[error("internal consistency failure: numerator of Δ − Δ_{alpha}({beta}) is not divisible by z")]
    NotDivisibleByZ { alpha: usize, beta: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
