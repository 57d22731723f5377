use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected rank {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular matrix where an invertible one is required")]
    Singular,

    #[error("improper coloring: arcs {0} and {1} share a color")]
    ImproperColoring(usize, usize),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("no Euler data for face {0}")]
    MissingAnnotation(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn inconsistent(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}
