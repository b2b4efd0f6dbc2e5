use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(u64, u64),
    #[error("radicand must be a positive integer, got {0}")]
    InvalidRadicand(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bracket is undefined for mixed-parity arguments")]
    MixedParity,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
