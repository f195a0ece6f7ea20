use thiserror::Error;

/// Errors raised by samplers, solvers and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter combination violates a documented precondition.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// An input file or in-memory structure is malformed.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A certificate or solution failed re-verification. This indicates a solver bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
