//! Error type for generation and fitting.

use synact_skeleton::ActionLabel;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynthError {
    #[error(transparent)]
    Skeleton(#[from] synact_skeleton::SkeletonError),

    #[error(transparent)]
    Metrics(#[from] synact_metrics::MetricsError),

    #[error("invalid generation request: {0}")]
    InvalidRequest(String),

    #[error("profile field {field} = {value} outside [{lo}, {hi}]")]
    ProfileOutOfBounds { field: &'static str, value: f64, lo: f64, hi: f64 },

    #[error("metric profiles have mismatched layouts: {0}")]
    LayoutMismatch(String),

    #[error("loss inputs must be non-negative: {0}")]
    NegativeLoss(String),

    #[error("moca score {0} outside [0, 30]")]
    MocaOutOfRange(u8),

    #[error("fit needs a budget of at least 1 evaluation")]
    ZeroBudget,

    #[error("curriculum order names {0} but no target was supplied for it")]
    MissingTarget(ActionLabel),
}

pub type Result<T> = std::result::Result<T, SynthError>;
