//! Error type for feature extraction and training.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LearnError {
    #[error(transparent)]
    Metrics(#[from] synact_metrics::MetricsError),

    #[error("empty dataset")]
    EmptyDataset,

    #[error("degenerate class set: training data has {0} distinct labels, need at least 2")]
    DegenerateClasses(usize),

    #[error("feature dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid checkpoint: {0}")]
    Checkpoint(String),
}

impl From<serde_json::Error> for LearnError {
    fn from(e: serde_json::Error) -> LearnError {
        LearnError::Checkpoint(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, LearnError>;
