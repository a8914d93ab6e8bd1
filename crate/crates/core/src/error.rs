use thiserror::Error;

/// Errors raised by the library. Verdicts such as `singular` or `violated`
/// are ordinary return values, never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid field descriptor: {0}")]
    FieldDescriptor(String),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
