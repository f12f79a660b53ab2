use thiserror::Error;

use crate::EdgeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is not present in this view")]
    InvalidEdge(EdgeId),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph has no totally cyclic orientations: {0}")]
    NoTotallyCyclic(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    ResourceCap { what: &'static str, cap: u64 },

    #[error("orientations belong to different views")]
    ViewMismatch,

    /// An internal invariant was violated. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
