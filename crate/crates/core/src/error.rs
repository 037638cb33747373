//! Error type shared across the crate.

use thiserror::Error;

/// Unified error for tensor, model, data and experiment code.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes that must agree do not.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An index (neuron, layer, label, token) is out of range.
    #[error("index out of range: {0}")]
    Index(String),

    /// A model or experiment configuration is internally inconsistent.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A dataset spec cannot be realized (counts, correlation ratio).
    #[error("invalid dataset spec: {0}")]
    Spec(String),

    /// A balanced split could not be drawn.
    #[error("split failed: {0}")]
    Split(String),

    /// An operation was applied to the wrong model family.
    #[error("model family mismatch: {0}")]
    Family(String),

    /// A serialized container is malformed or has the wrong version.
    #[error("format error: {0}")]
    Format(String),

    /// Optimization diverged or produced non-finite values.
    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 for I/O-level failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::Format(_) => 2,
            _ => 1,
        }
    }
}
