use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("too many variables: {0} (at most {max} are supported)", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),

    #[error("exponent overflow: total degree would exceed 255")]
    ExponentOverflow,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("division is not exact")]
    NotDivisible,

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not in span: {0}")]
    NotInSpan(String),

    #[error("rank deficient system: {0}")]
    RankDeficient(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("{0}")]
    Usage(String),
}
