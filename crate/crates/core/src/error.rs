use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what} has size {size}, exceeding the configured cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant failure: {0}")]
    InvariantFailure(String),

    #[error("improper coloring: objects {earlier} and {later} intersect and share a color")]
    ImproperColoring { earlier: usize, later: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("generation failed: {0}")]
    GenerationFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::InvariantFailure(msg.into())
}
