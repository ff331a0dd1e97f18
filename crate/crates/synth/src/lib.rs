//! Condition-conditioned skeleton clip synthesis.
//!
//! A parametric kinematic generator produces activity clips whose motion
//! characteristics are driven by a [`ConditionProfile`] — cadence, stride,
//! stoop, stand-up oscillation, tremor — with per-condition defaults shipped
//! in a config table and a MoCA-score interpolation between them. The
//! metric-loss machinery and the Nelder–Mead fitter close the loop: profiles
//! can be recovered by minimizing the discrepancy between generated and
//! target motion metrics, per action or along a curriculum.

pub mod body;
pub mod config;
pub mod error;
pub mod fit;
pub mod generate;
pub mod loss;
pub mod profile;

pub use config::{default_alpha, default_table, ProfileTable};
pub use error::{Result, SynthError};
pub use fit::{
    active_params, curriculum_fit, fit_profile, FitOptions, FitResult, DEFAULT_CURRICULUM,
};
pub use generate::{
    generate_clip, GenerationRequest, SUBJECT_PLACEMENT, TRANSITION_END_FRAC,
    TRANSITION_START_FRAC,
};
pub use loss::{metric_loss, reconstruction_loss, stage3_loss, MetricLoss};
pub use profile::{default_profile, ConditionProfile, ProfileBounds, ProfileParam};
