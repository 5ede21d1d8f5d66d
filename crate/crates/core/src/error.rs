use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded for {what}: {actual} > {limit}")]
    ResourceCap {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("realization is not generic: {0}")]
    Genericity(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A search that a theorem guarantees to succeed came back empty.
    #[error("theorem-guaranteed search failed: {0}")]
    SearchExhausted(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub(crate) fn check_cap(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::ResourceCap { what, limit, actual })
    } else {
        Ok(())
    }
}
