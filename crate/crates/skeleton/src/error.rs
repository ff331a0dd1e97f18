//! Error type for parsing, serialization and validation.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SkeletonError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Native clip document could not be decoded.
    #[error("invalid clip document: {0}")]
    Document(String),

    /// A clip invariant does not hold.
    #[error("validation failed: {0}")]
    Validation(String),

    /// Capture-format text could not be parsed; `line` is 1-based.
    #[error("capture parse error at line {line}: {message}")]
    Capture { line: usize, message: String },
}

impl From<serde_json::Error> for SkeletonError {
    fn from(e: serde_json::Error) -> SkeletonError {
        SkeletonError::Document(e.to_string())
    }
}
