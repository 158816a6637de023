use thiserror::Error;

/// Errors raised by graph construction, realization checks and the bounds engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A supplied certificate (coloring, homomorphism, circular coloring) failed its check.
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    /// Internal inconsistency, e.g. an inverted bound interval. Always a bug.
    #[error("internal consistency violated: {0}")]
    Consistency(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
