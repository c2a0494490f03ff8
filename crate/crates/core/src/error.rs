use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("weight {0} is not dominant")]
    NonDominantWeight(String),
    #[error("weight {0} is not integral")]
    NonIntegralWeight(String),
    #[error("parameters out of range: {0}")]
    BadParam(String),
    #[error("bad range: need a < b <= c < d, got ({a}, {b}; {c}, {d})")]
    BadRange { a: i64, b: i64, c: i64, d: i64 },
    #[error("repeated eigenvalue {0}")]
    RepeatedEigenvalue(String),
    #[error("no matrix realization for {0}")]
    UnsupportedRealization(String),
    #[error("invariant form is degenerate")]
    DegenerateForm,
    #[error("spectrum is incomplete: projector for {0} is not idempotent")]
    IncompleteSpectrum(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("module too large: dimension {dim} exceeds cap {cap}")]
    TooLarge { dim: u64, cap: u64 },
    #[error("not a character: multiplicity of {0} went negative while stripping")]
    NotACharacter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
