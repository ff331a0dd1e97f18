//! Action classifier: feature standardization + a softmax MLP trained with
//! mini-batch gradient descent.

use std::path::Path;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use synact_skeleton::ActionLabel;

use crate::error::{LearnError, Result};
use crate::mlp::{cross_entropy, SoftmaxMlp};

/// Per-dimension standardization fitted on the training set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalizer {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

impl Normalizer {
    pub fn fit(samples: &[Vec<f64>]) -> Normalizer {
        let dim = samples[0].len();
        let n = samples.len() as f64;
        let mut mean = vec![0.0; dim];
        for s in samples {
            for (m, v) in mean.iter_mut().zip(s.iter()) {
                *m += v;
            }
        }
        for m in mean.iter_mut() {
            *m /= n;
        }
        let mut var = vec![0.0; dim];
        for s in samples {
            for ((v, m), x) in var.iter_mut().zip(mean.iter()).zip(s.iter()) {
                *v += (x - m) * (x - m);
            }
        }
        let std = var.iter().map(|v| (v / n).sqrt().max(1e-8)).collect();
        Normalizer { mean, std }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(self.mean.iter().zip(self.std.iter()))
            .map(|(v, (m, s))| (v - m) / s)
            .collect()
    }
}

/// Trained classifier: normalizer + one-hidden-layer softmax MLP over the
/// full action-label set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierModel {
    pub normalizer: Normalizer,
    pub mlp: SoftmaxMlp,
}

impl ClassifierModel {
    pub fn predict_proba(&self, features: &[f64]) -> Result<Vec<f64>> {
        if features.len() != self.normalizer.mean.len() {
            return Err(LearnError::DimensionMismatch {
                expected: self.normalizer.mean.len(),
                got: features.len(),
            });
        }
        Ok(self.mlp.forward(&self.normalizer.apply(features)))
    }

    /// Most probable action; ties break toward the lower class index.
    pub fn predict(&self, features: &[f64]) -> Result<ActionLabel> {
        let probs = self.predict_proba(features)?;
        let mut best = 0;
        for (i, p) in probs.iter().enumerate() {
            if *p > probs[best] {
                best = i;
            }
        }
        Ok(ActionLabel::ALL[best])
    }

    /// Serialize to a self-describing JSON document (layer dims plus
    /// row-major weights).
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<ClassifierModel> {
        let text = std::fs::read_to_string(path)?;
        let model: ClassifierModel = serde_json::from_str(&text)?;
        if model.mlp.hidden.in_dim != model.normalizer.mean.len() {
            return Err(LearnError::Checkpoint("normalizer/layer dimension mismatch".into()));
        }
        Ok(model)
    }
}

/// Training hyperparameters. The defaults are tuned for stable convergence
/// on desk-scale feature sets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub hidden_dim: usize,
    pub learning_rate: f64,
    pub batch_size: usize,
    pub epochs: usize,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> TrainConfig {
        TrainConfig { hidden_dim: 16, learning_rate: 0.05, batch_size: 32, epochs: 300, seed: 0 }
    }
}

/// Model plus the final mean training loss.
#[derive(Debug, Clone)]
pub struct TrainedClassifier {
    pub model: ClassifierModel,
    pub final_loss: f64,
}

/// Train on (features, label) pairs with mini-batch gradient descent on the
/// mean cross entropy. Deterministic for a fixed seed and data order.
pub fn train_classifier(
    dataset: &[(Vec<f64>, ActionLabel)],
    config: &TrainConfig,
) -> Result<TrainedClassifier> {
    if dataset.is_empty() {
        return Err(LearnError::EmptyDataset);
    }
    if config.learning_rate <= 0.0 || config.epochs == 0 || config.batch_size == 0 {
        return Err(LearnError::InvalidConfig(
            "learning rate, epochs and batch size must be positive".into(),
        ));
    }
    let distinct: std::collections::BTreeSet<ActionLabel> =
        dataset.iter().map(|(_, l)| *l).collect();
    if distinct.len() < 2 {
        return Err(LearnError::DegenerateClasses(distinct.len()));
    }
    let dim = dataset[0].0.len();
    for (x, _) in dataset {
        if x.len() != dim {
            return Err(LearnError::DimensionMismatch { expected: dim, got: x.len() });
        }
    }

    let features: Vec<Vec<f64>> = dataset.iter().map(|(x, _)| x.clone()).collect();
    let normalizer = Normalizer::fit(&features);
    let normalized: Vec<Vec<f64>> = features.iter().map(|x| normalizer.apply(x)).collect();
    let labels: Vec<usize> = dataset.iter().map(|(_, l)| l.class_index()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut mlp = SoftmaxMlp::new_random(dim, config.hidden_dim, ActionLabel::ALL.len(), &mut rng);

    let mut order: Vec<usize> = (0..dataset.len()).collect();
    let mut final_loss = f64::INFINITY;
    for _epoch in 0..config.epochs {
        order.shuffle(&mut rng);
        let mut epoch_loss = 0.0;
        for batch in order.chunks(config.batch_size) {
            let mut grad = mlp.zero_grad();
            let mut batch_loss = 0.0;
            for &i in batch {
                let (loss, _) = mlp.backward(&normalized[i], labels[i], &mut grad);
                batch_loss += loss;
            }
            mlp.apply(&grad, config.learning_rate, batch.len() as f64);
            epoch_loss += batch_loss;
        }
        final_loss = epoch_loss / dataset.len() as f64;
    }

    Ok(TrainedClassifier { model: ClassifierModel { normalizer, mlp }, final_loss })
}

/// Mean training-set cross entropy of a trained model (diagnostic helper).
pub fn dataset_loss(model: &ClassifierModel, dataset: &[(Vec<f64>, ActionLabel)]) -> Result<f64> {
    let mut total = 0.0;
    for (x, label) in dataset {
        let probs = model.predict_proba(x)?;
        total += cross_entropy(&probs, label.class_index());
    }
    Ok(total / dataset.len() as f64)
}
