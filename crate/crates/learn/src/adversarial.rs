//! Domain-adversarial training with a gradient-reversal connection.
//!
//! A small feature-mapping layer sits on top of the extracted features and
//! feeds two heads: an action classifier (the main task) and a domain
//! discriminator (general vs AD-specific). The discriminator trains to
//! minimize its own loss; the mapper receives the domain branch's gradient
//! sign-flipped and scaled by `reversal_strength · lambda`, so it learns
//! representations the discriminator cannot separate while the action head
//! keeps working.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use synact_skeleton::{ActionLabel, Condition, SkeletonClip};

use crate::classifier::Normalizer;
use crate::error::{LearnError, Result};
use crate::features::extract_features;
use crate::mlp::{
    cross_entropy, softmax_ce_grad, tanh_backward, tanh_forward, Linear, LinearGrad, SoftmaxMlp,
    SoftmaxMlpGrad,
};

/// Default domain alignment weight.
pub const DEFAULT_DOMAIN_WEIGHT: f64 = 0.25;

/// Which distribution a clip came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    General = 0,
    AdSpecific = 1,
}

impl Domain {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Stage-2 composite: `main_loss − lambda · domain_loss`. The negative sign
/// is the adversarial part — the encoder side profits from a confused
/// discriminator.
pub fn stage2_loss(main_loss: f64, domain_loss: f64, lambda: f64) -> Result<f64> {
    if !(lambda.is_finite() && lambda >= 0.0) {
        return Err(LearnError::InvalidConfig(format!("lambda {lambda} must be ≥ 0")));
    }
    if !main_loss.is_finite() || !domain_loss.is_finite() {
        return Err(LearnError::InvalidConfig("losses must be finite".into()));
    }
    Ok(main_loss - lambda * domain_loss)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdversarialConfig {
    /// Domain alignment weight (λ).
    pub lambda: f64,
    /// Scale of the reversed gradient into the mapper; 0 is the ablation
    /// that trains the discriminator but never pushes back.
    pub reversal_strength: f64,
    pub mapper_dim: usize,
    pub disc_hidden: usize,
    pub learning_rate: f64,
    /// Annealing strength for the step size: `lr / (1 + decay·progress)^0.75`
    /// with progress running 0→1 over the epochs. Damps the minimax
    /// oscillation near equilibrium; 0 keeps the rate constant.
    pub lr_decay: f64,
    /// Discriminator-only updates taken on each batch before the joint
    /// update. Keeping the adversary near-optimal sharpens the reversed
    /// gradient the mapper erases against.
    pub disc_steps: usize,
    pub batch_size: usize,
    pub epochs: usize,
    pub seed: u64,
}

impl Default for AdversarialConfig {
    fn default() -> AdversarialConfig {
        AdversarialConfig {
            lambda: DEFAULT_DOMAIN_WEIGHT,
            reversal_strength: 1.0,
            mapper_dim: 16,
            disc_hidden: 8,
            learning_rate: 0.05,
            lr_decay: 10.0,
            disc_steps: 3,
            batch_size: 16,
            epochs: 400,
            seed: 0,
        }
    }
}

/// The shared representation: standardization plus one tanh layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMapper {
    pub normalizer: Normalizer,
    pub layer: Linear,
}

impl FeatureMapper {
    pub fn map(&self, raw_features: &[f64]) -> Vec<f64> {
        tanh_forward(&self.layer.forward(&self.normalizer.apply(raw_features)))
    }
}

/// One training sample: raw features plus both labels.
#[derive(Debug, Clone)]
pub struct DomainSample {
    pub features: Vec<f64>,
    pub action: ActionLabel,
    pub domain: Domain,
}

/// Per-epoch bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct EpochStats {
    pub epoch: usize,
    pub l_main: f64,
    pub l_domain: f64,
    pub stage2: f64,
    pub disc_accuracy: f64,
}

/// Result of adversarial training.
#[derive(Debug, Clone)]
pub struct AdversarialOutcome {
    pub mapper: FeatureMapper,
    pub action_head: Linear,
    pub discriminator: SoftmaxMlp,
    pub history: Vec<EpochStats>,
}

/// Training history as CSV with the fixed header
/// `epoch,l_main,l_domain,stage2,disc_acc`.
pub fn history_to_csv(history: &[EpochStats]) -> String {
    let mut out = String::from("epoch,l_main,l_domain,stage2,disc_acc\n");
    for row in history {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.epoch, row.l_main, row.l_domain, row.stage2, row.disc_accuracy
        ));
    }
    out
}

/// Summed batch gradients for all three components. `mapper` is the update
/// direction the mapper actually descends (action branch plus the reversed,
/// λ-scaled domain branch); `mapper_domain_raw` is the domain branch before
/// reversal, kept separate so the reversal identity is checkable.
pub struct AdversarialBatchGrads {
    pub mapper: LinearGrad,
    pub mapper_domain_raw: LinearGrad,
    pub action_head: LinearGrad,
    pub discriminator: SoftmaxMlpGrad,
    pub l_main: f64,
    pub l_domain: f64,
}

/// Forward/backward over one batch of normalized samples.
pub fn adversarial_batch_gradients(
    mapper: &FeatureMapper,
    action_head: &Linear,
    discriminator: &SoftmaxMlp,
    batch: &[(&[f64], usize, usize)],
    lambda: f64,
    reversal_strength: f64,
) -> AdversarialBatchGrads {
    let mut grads = AdversarialBatchGrads {
        mapper: mapper.layer.zero_grad(),
        mapper_domain_raw: mapper.layer.zero_grad(),
        action_head: action_head.zero_grad(),
        discriminator: discriminator.zero_grad(),
        l_main: 0.0,
        l_domain: 0.0,
    };
    for (x, action, domain) in batch {
        let representation = tanh_forward(&mapper.layer.forward(x));

        // Action branch.
        let action_probs = crate::mlp::softmax(&action_head.forward(&representation));
        grads.l_main += cross_entropy(&action_probs, *action);
        let d_logits = softmax_ce_grad(&action_probs, *action);
        let d_repr_action = action_head.backward(&representation, &d_logits, &mut grads.action_head);

        // Domain branch: the discriminator minimizes its loss on its own
        // parameters; its gradient with respect to the representation is
        // what the reversal flips.
        let (domain_loss, d_repr_domain) =
            discriminator.backward(&representation, *domain, &mut grads.discriminator);
        grads.l_domain += domain_loss;

        // Mapper: action branch as-is, domain branch sign-flipped and scaled.
        let factor = -reversal_strength * lambda;
        let d_repr: Vec<f64> = d_repr_action
            .iter()
            .zip(d_repr_domain.iter())
            .map(|(a, d)| a + factor * d)
            .collect();
        let dz = tanh_backward(&representation, &d_repr);
        mapper.layer.backward(x, &dz, &mut grads.mapper);

        let dz_raw = tanh_backward(&representation, &d_repr_domain);
        mapper.layer.backward(x, &dz_raw, &mut grads.mapper_domain_raw);
    }
    grads
}

fn samples_from_clips(clips: &[SkeletonClip], domain: Domain) -> Result<Vec<DomainSample>> {
    clips
        .iter()
        .map(|clip| {
            Ok(DomainSample {
                features: extract_features(clip)?,
                action: clip.action,
                domain,
            })
        })
        .collect()
}

/// Train the feature mapper, action head and domain discriminator jointly
/// on two domain sets. History records per-epoch mean main loss, mean
/// domain loss, their stage-2 combination, and training discriminator
/// accuracy.
pub fn adversarial_train(
    general: &[SkeletonClip],
    ad_specific: &[SkeletonClip],
    config: &AdversarialConfig,
) -> Result<AdversarialOutcome> {
    if general.is_empty() || ad_specific.is_empty() {
        return Err(LearnError::EmptyDataset);
    }
    let mut samples = samples_from_clips(general, Domain::General)?;
    samples.extend(samples_from_clips(ad_specific, Domain::AdSpecific)?);

    let raw: Vec<Vec<f64>> = samples.iter().map(|s| s.features.clone()).collect();
    let normalizer = Normalizer::fit(&raw);
    let normalized: Vec<Vec<f64>> = raw.iter().map(|x| normalizer.apply(x)).collect();

    let dim = normalized[0].len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut mapper = FeatureMapper {
        normalizer,
        layer: Linear::new_random(dim, config.mapper_dim, &mut rng),
    };
    let mut action_head =
        Linear::new_random(config.mapper_dim, ActionLabel::ALL.len(), &mut rng);
    let mut discriminator =
        SoftmaxMlp::new_random(config.mapper_dim, config.disc_hidden, 2, &mut rng);

    let mut order: Vec<usize> = (0..samples.len()).collect();
    let mut history = Vec::with_capacity(config.epochs);
    for epoch in 0..config.epochs {
        let progress = epoch as f64 / config.epochs.max(1) as f64;
        let lr = config.learning_rate / (1.0 + config.lr_decay * progress).powf(0.75);
        order.shuffle(&mut rng);
        let mut l_main_sum = 0.0;
        let mut l_domain_sum = 0.0;
        for batch_indices in order.chunks(config.batch_size) {
            let batch: Vec<(&[f64], usize, usize)> = batch_indices
                .iter()
                .map(|&i| {
                    (
                        normalized[i].as_slice(),
                        samples[i].action.class_index(),
                        samples[i].domain.index(),
                    )
                })
                .collect();
            let scale = batch.len() as f64;
            for _ in 1..config.disc_steps.max(1) {
                let warmup = adversarial_batch_gradients(
                    &mapper,
                    &action_head,
                    &discriminator,
                    &batch,
                    config.lambda,
                    config.reversal_strength,
                );
                discriminator.apply(&warmup.discriminator, lr, scale);
            }
            let grads = adversarial_batch_gradients(
                &mapper,
                &action_head,
                &discriminator,
                &batch,
                config.lambda,
                config.reversal_strength,
            );
            mapper.layer.apply(&grads.mapper, lr, scale);
            action_head.apply(&grads.action_head, lr, scale);
            discriminator.apply(&grads.discriminator, lr, scale);
            l_main_sum += grads.l_main;
            l_domain_sum += grads.l_domain;
        }

        let l_main = l_main_sum / samples.len() as f64;
        let l_domain = l_domain_sum / samples.len() as f64;
        let correct = samples
            .iter()
            .zip(normalized.iter())
            .filter(|(s, x)| {
                let r = tanh_forward(&mapper.layer.forward(x));
                argmax(&discriminator.forward(&r)) == s.domain.index()
            })
            .count();
        history.push(EpochStats {
            epoch,
            l_main,
            l_domain,
            stage2: stage2_loss(l_main, l_domain, config.lambda)?,
            disc_accuracy: correct as f64 / samples.len() as f64,
        });
    }

    Ok(AdversarialOutcome { mapper, action_head, discriminator, history })
}

fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

/// Domain of a clip by its condition annotation: AD subjects form the
/// AD-specific domain, MCI/NC the general one.
pub fn domain_of(clip: &SkeletonClip) -> Domain {
    match clip.metadata.condition {
        Condition::Ad => Domain::AdSpecific,
        _ => Domain::General,
    }
}

/// Fraction of clips whose domain the discriminator gets right.
pub fn discriminator_accuracy(
    mapper: &FeatureMapper,
    discriminator: &SoftmaxMlp,
    clips: &[SkeletonClip],
    domains: &[Domain],
) -> Result<f64> {
    if clips.is_empty() {
        return Err(LearnError::EmptyDataset);
    }
    let mut correct = 0;
    for (clip, domain) in clips.iter().zip(domains.iter()) {
        let r = mapper.map(&extract_features(clip)?);
        if argmax(&discriminator.forward(&r)) == domain.index() {
            correct += 1;
        }
    }
    Ok(correct as f64 / clips.len() as f64)
}

/// Fraction of clips whose action the action head gets right.
pub fn action_accuracy(
    mapper: &FeatureMapper,
    action_head: &Linear,
    clips: &[SkeletonClip],
) -> Result<f64> {
    if clips.is_empty() {
        return Err(LearnError::EmptyDataset);
    }
    let mut correct = 0;
    for clip in clips {
        let r = mapper.map(&extract_features(clip)?);
        if argmax(&action_head.forward(&r)) == clip.action.class_index() {
            correct += 1;
        }
    }
    Ok(correct as f64 / clips.len() as f64)
}
