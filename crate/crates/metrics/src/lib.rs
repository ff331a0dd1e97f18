//! Motion metrics for skeleton clips.
//!
//! Implements the validation toolkit used throughout the workspace: joint
//! angles under a documented clinical convention, joint speeds, range of
//! motion, DTW alignment with path recovery, Pearson correlation, Welch's
//! t-test (with a self-contained Student-t CDF), per-joint metric profiles
//! and the per-feature comparison report between real and synthetic clip
//! sets.
//!
//! All operations are pure functions of their inputs; per-clip computations
//! can safely run in parallel and report assembly is a deterministic
//! reduction.

pub mod angle;
pub mod dtw;
pub mod error;
pub mod features;
pub mod profile;
pub mod report;
pub mod series;
pub mod speed;
pub mod stats;

pub use angle::{angle_series, joint_angle, trunk_pitch_series, GEOMETRY_EPS_M};
pub use dtw::{dtw_align, warped_pair, DtwAlignment};
pub use error::{MetricsError, Result};
pub use features::{angle_feature_for, FeatureId, FeatureKind};
pub use profile::{metric_profile, AngleSummary, JointMetrics, MetricProfile};
pub use report::{
    compare_report, correlation_matrix, feature_series, mean_feature_curve,
    pooled_feature_values, warped_correlation, ComparisonReport, ReportRow, RESAMPLE_LEN,
};
pub use series::{
    histogram, mean, range_of_motion, resample_linear, sample_variance, FeatureSeries, Units,
    DEFAULT_HISTOGRAM_BINS,
};
pub use speed::{
    joint_speed_series, speed_series, velocity_sign_reversals, vertical_velocity_series,
};
pub use stats::{
    chi_square_sf, ln_gamma, pearson_correlation, regularized_gamma_p,
    regularized_incomplete_beta, student_t_cdf, welch_t_test, TTest,
};
