//! Imbalanced activity-recognition benchmark at desk scale.
//!
//! Reproduces the structure of the data-enhancement experiments: build an
//! imbalanced training set, apply each strategy (vanilla, classic
//! augmentation, bootstrap, healthy-subject mixing, balanced synthesis),
//! train one classifier per strategy on identical folds, and report
//! per-class accuracy tables for both the skeleton-feature and the
//! depth-feature pipelines.
//!
//! Everything here trains on synthesizer outputs with randomized
//! per-subject parameters — the benchmark validates the imbalance and
//! augmentation mechanics, not any real-world absolute accuracy.
//!
//! Strategies are independent and could run in parallel; each owns its
//! training state and results merge deterministically in strategy order.

pub mod config;
pub mod dataset;
pub mod error;
pub mod experiment;
pub mod strategies;

pub use config::{BenchConfig, Track};
pub use dataset::{
    build_imbalanced_trainset, build_testset, desk_distribution, sample_subject_profile,
    sample_subject_profile_for, ClassDistribution, GenParams, BENCH_ACTIONS,
};
pub use error::{BenchError, Result};
pub use experiment::{results_to_csv, run_depth_experiment, run_experiment, ExperimentResult};
pub use strategies::{
    augment_bootstrap, augment_classic, build_open_mix, build_synthetic_balanced, ClassicDaParams,
    Strategy,
};
