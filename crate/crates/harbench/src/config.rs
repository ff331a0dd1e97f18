//! Experiment configuration document (TOML).

use std::collections::BTreeMap;

use serde::Deserialize;
use synact_learn::TrainConfig;
use synact_skeleton::ActionLabel;

use crate::dataset::{desk_distribution, ClassDistribution, GenParams};
use crate::error::{BenchError, Result};
use crate::strategies::Strategy;

/// Which feature pipeline the experiment uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Track {
    Skeleton,
    Depth,
}

#[derive(Debug, Deserialize)]
struct RawConfig {
    #[serde(default)]
    seed: u64,
    #[serde(default = "default_track")]
    track: Track,
    #[serde(default = "default_test_per_class")]
    test_per_class: usize,
    duration_s: Option<f64>,
    fps: Option<f64>,
    /// Per-action clip counts; the desk-scale distribution when omitted.
    distribution: Option<BTreeMap<String, usize>>,
    /// Strategy list; the default ladder when omitted.
    #[serde(default)]
    strategies: Vec<Strategy>,
    #[serde(default)]
    training: RawTraining,
}

fn default_track() -> Track {
    Track::Skeleton
}
fn default_test_per_class() -> usize {
    40
}

#[derive(Debug, Default, Deserialize)]
struct RawTraining {
    hidden_dim: Option<usize>,
    learning_rate: Option<f64>,
    batch_size: Option<usize>,
    epochs: Option<usize>,
}

/// Fully-resolved benchmark configuration.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub seed: u64,
    pub track: Track,
    pub test_per_class: usize,
    pub gen_params: GenParams,
    pub distribution: ClassDistribution,
    pub strategies: Vec<Strategy>,
    pub train_config: TrainConfig,
}

impl BenchConfig {
    /// Defaults: skeleton track, desk distribution, full strategy ladder.
    pub fn default_skeleton(seed: u64) -> BenchConfig {
        BenchConfig {
            seed,
            track: Track::Skeleton,
            test_per_class: 40,
            gen_params: GenParams::default(),
            distribution: desk_distribution(),
            strategies: Strategy::default_ladder(),
            train_config: TrainConfig::default(),
        }
    }

    /// Defaults for the depth track: shorter clips at a lower frame rate.
    pub fn default_depth(seed: u64) -> BenchConfig {
        BenchConfig {
            track: Track::Depth,
            gen_params: GenParams::depth(),
            ..BenchConfig::default_skeleton(seed)
        }
    }

    /// Parse the TOML experiment document.
    pub fn from_toml(text: &str) -> Result<BenchConfig> {
        let raw: RawConfig =
            toml::from_str(text).map_err(|e| BenchError::Config(e.to_string()))?;
        let mut config = match raw.track {
            Track::Skeleton => BenchConfig::default_skeleton(raw.seed),
            Track::Depth => BenchConfig::default_depth(raw.seed),
        };
        config.test_per_class = raw.test_per_class;
        if let Some(d) = raw.duration_s {
            config.gen_params.duration_s = d;
        }
        if let Some(f) = raw.fps {
            config.gen_params.fps = f;
        }
        if let Some(counts) = raw.distribution {
            let mut parsed = BTreeMap::new();
            for (name, count) in counts {
                let action = ActionLabel::parse(&name)
                    .ok_or_else(|| BenchError::Config(format!("unknown action {name:?}")))?;
                parsed.insert(action, count);
            }
            config.distribution = ClassDistribution::new(parsed)?;
        }
        if !raw.strategies.is_empty() {
            config.strategies = raw.strategies;
        }
        if let Some(v) = raw.training.hidden_dim {
            config.train_config.hidden_dim = v;
        }
        if let Some(v) = raw.training.learning_rate {
            config.train_config.learning_rate = v;
        }
        if let Some(v) = raw.training.batch_size {
            config.train_config.batch_size = v;
        }
        if let Some(v) = raw.training.epochs {
            config.train_config.epochs = v;
        }
        Ok(config)
    }
}
