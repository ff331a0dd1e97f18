//! Error type for metric computations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MetricsError {
    /// A limb segment shorter than the geometric epsilon; carries the frame
    /// index when the failure happened inside a series computation.
    #[error("degenerate geometry{}: {what}", frame.map(|f| format!(" at frame {f}")).unwrap_or_default())]
    DegenerateGeometry { frame: Option<usize>, what: String },

    #[error("need at least {needed} frames, clip has {got}")]
    InsufficientFrames { needed: usize, got: usize },

    #[error("empty input: {0}")]
    Empty(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("correlation undefined: {0}")]
    ZeroVariance(String),

    #[error("sample too small: need at least {needed} values, got {got}")]
    SampleTooSmall { needed: usize, got: usize },

    #[error("zero denominator for feature {feature}")]
    ZeroDenominator { feature: String },

    #[error("warp path index ({i}, {j}) out of range for lengths ({len_a}, {len_b})")]
    PathOutOfRange { i: usize, j: usize, len_a: usize, len_b: usize },

    #[error("{0} is not an angle feature")]
    NotAnAngleFeature(String),

    #[error("clip sets must share one action: {0}")]
    ActionMismatch(String),

    #[error("histogram needs at least one bin")]
    ZeroBins,
}

pub type Result<T> = std::result::Result<T, MetricsError>;
