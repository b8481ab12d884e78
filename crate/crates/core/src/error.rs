use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at q = 0")]
    ZeroPoint,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is not a scalar multiple of the identity")]
    NonScalar,
    #[error("singular matrix")]
    Singular,
    #[error("decomposition is not unique (rank deficiency at this value of q)")]
    RankDeficient,
    #[error("almost-representation relations do not share one factor: {0}")]
    InconsistentFactor(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
    #[error("unsolved constraint system: {0}")]
    Unsolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;
