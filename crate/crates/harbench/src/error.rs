//! Error type for the benchmark harness.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Skeleton(#[from] synact_skeleton::SkeletonError),

    #[error(transparent)]
    Synth(#[from] synact_synth::SynthError),

    #[error(transparent)]
    Learn(#[from] synact_learn::LearnError),

    #[error(transparent)]
    Render(#[from] synact_render::RenderError),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid strategy parameters: {0}")]
    InvalidStrategy(String),

    #[error("augmentation input is empty")]
    EmptyInput,

    #[error("invalid config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, BenchError>;
