use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not line up (matmul, inner products, LP columns...).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A precondition on the input values was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A parity-check matrix is not usable as a code (rank deficient, k out of range).
    #[error("invalid code: {0}")]
    InvalidCode(String),

    /// The simplex iteration cap was hit; the instance is reported, never mis-answered.
    #[error("simplex did not terminate within {limit} iterations")]
    IterationLimit { limit: usize },

    /// Internal invariant broken (a solver certificate failed to re-verify).
    #[error("internal error: {0}")]
    Internal(String),

    /// Malformed JSON input for a matrix, vector, or code description.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
