//! Benchmark dataset builders.
//!
//! The benchmark has no access to real recordings, so its "real-like" sets
//! are synthesizer outputs with randomized per-subject parameter jitter:
//! each clip gets a fresh subject whose condition, MoCA score and kinematic
//! parameters are drawn around the condition defaults. Training and test
//! clips draw from disjoint seed streams and carry `train/` and `test/`
//! subject-id prefixes as provenance tags.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use synact_skeleton::{seed, ActionLabel, Condition, SkeletonClip};
use synact_synth::{default_profile, default_table, generate_clip, ConditionProfile, GenerationRequest, ProfileParam};

use crate::error::{BenchError, Result};

/// The five benchmark action classes (the transitions are not part of the
/// recognition task).
pub const BENCH_ACTIONS: [ActionLabel; 5] = [
    ActionLabel::Sitting,
    ActionLabel::Standing,
    ActionLabel::Walking,
    ActionLabel::Turning,
    ActionLabel::Lying,
];

/// Per-action clip counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDistribution(BTreeMap<ActionLabel, usize>);

impl ClassDistribution {
    pub fn new(counts: BTreeMap<ActionLabel, usize>) -> Result<ClassDistribution> {
        let nonzero = counts.values().filter(|c| **c > 0).count();
        if nonzero < 2 {
            return Err(BenchError::InvalidDistribution(format!(
                "need at least two nonzero classes, found {nonzero}"
            )));
        }
        Ok(ClassDistribution(counts))
    }

    pub fn count(&self, action: ActionLabel) -> usize {
        self.0.get(&action).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (ActionLabel, usize)> + '_ {
        self.0.iter().map(|(a, c)| (*a, *c))
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

/// The desk-scale imbalanced training distribution: the reference corpus
/// counts (sitting 16,596 / standing 3,121 / walking 1,735 / turning 272 /
/// lying 186) divided by 50 and rounded up.
pub fn desk_distribution() -> ClassDistribution {
    let mut counts = BTreeMap::new();
    counts.insert(ActionLabel::Sitting, 332);
    counts.insert(ActionLabel::Standing, 63);
    counts.insert(ActionLabel::Walking, 35);
    counts.insert(ActionLabel::Turning, 6);
    counts.insert(ActionLabel::Lying, 4);
    ClassDistribution::new(counts).expect("desk distribution is valid")
}

/// Frame-rate and duration knobs for a generated set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub duration_s: f64,
    pub fps: f64,
}

impl Default for GenParams {
    fn default() -> GenParams {
        GenParams { duration_s: 3.0, fps: 30.0 }
    }
}

impl GenParams {
    /// Shorter, lower-rate clips for the depth track, where every frame
    /// must be rasterized.
    pub fn depth() -> GenParams {
        GenParams { duration_s: 2.0, fps: 15.0 }
    }
}

/// Multiplicative jitter range applied to each profile parameter when
/// sampling a subject.
const SUBJECT_JITTER: (f64, f64) = (0.80, 1.25);

/// Draw a subject: condition uniform over the three classes, MoCA uniform
/// inside the condition's clinical band, profile interpolated from the
/// table and jittered parameter-wise, clamped to bounds.
pub fn sample_subject_profile(rng: &mut ChaCha8Rng) -> (ConditionProfile, u8) {
    let condition = *[Condition::Ad, Condition::Mci, Condition::Nc].choose(rng).unwrap();
    sample_subject_profile_for(condition, rng)
}

/// Same as [`sample_subject_profile`] with the condition fixed.
pub fn sample_subject_profile_for(
    condition: Condition,
    rng: &mut ChaCha8Rng,
) -> (ConditionProfile, u8) {
    let moca = match condition {
        Condition::Ad => rng.random_range(3..=17),
        Condition::Mci => rng.random_range(18..=25),
        Condition::Nc => rng.random_range(26..=30),
    };
    let mut profile = default_profile(condition, Some(moca)).expect("moca in range");
    for param in ProfileParam::ALL {
        let factor = rng.random_range(SUBJECT_JITTER.0..SUBJECT_JITTER.1);
        let value = param.get(&profile) * factor;
        param.set(&mut profile, value);
    }
    (profile.clamped(&default_table().bounds), moca)
}

fn generate_tagged(
    action: ActionLabel,
    profile: ConditionProfile,
    moca: u8,
    params: GenParams,
    viewpoint_deg: f64,
    clip_seed: u64,
    subject_id: String,
) -> Result<SkeletonClip> {
    let request = GenerationRequest {
        action,
        profile,
        duration_s: params.duration_s,
        fps: params.fps,
        viewpoint_deg,
        seed: clip_seed,
    };
    let mut clip = generate_clip(&request)?;
    clip.metadata.subject_id = subject_id;
    clip.metadata.moca_score = Some(moca);
    Ok(clip)
}

/// Build the imbalanced training set: per-action counts from the
/// distribution, each clip from a fresh jittered subject at a random
/// viewpoint. Reproducible for a fixed seed.
pub fn build_imbalanced_trainset(
    distribution: &ClassDistribution,
    params: GenParams,
    seed_value: u64,
) -> Result<Vec<SkeletonClip>> {
    let mut clips = Vec::with_capacity(distribution.total());
    for (action, count) in distribution.entries() {
        let stream = seed::derive(seed_value, &format!("trainset/{action}"));
        let mut rng = ChaCha8Rng::seed_from_u64(stream);
        for i in 0..count {
            let (profile, moca) = sample_subject_profile(&mut rng);
            let viewpoint = rng.random_range(0.0..360.0);
            let clip_seed = rng.random::<u64>();
            clips.push(generate_tagged(
                action,
                profile,
                moca,
                params,
                viewpoint,
                clip_seed,
                format!("train/{action}/{i}"),
            )?);
        }
    }
    Ok(clips)
}

/// Build the balanced held-out test set from a seed stream disjoint from
/// every training stream.
pub fn build_testset(
    per_class: usize,
    params: GenParams,
    seed_value: u64,
) -> Result<Vec<SkeletonClip>> {
    let mut clips = Vec::with_capacity(per_class * BENCH_ACTIONS.len());
    for action in BENCH_ACTIONS {
        let stream = seed::derive(seed_value, &format!("testset/{action}"));
        let mut rng = ChaCha8Rng::seed_from_u64(stream);
        for i in 0..per_class {
            let (profile, moca) = sample_subject_profile(&mut rng);
            let viewpoint = rng.random_range(0.0..360.0);
            let clip_seed = rng.random::<u64>();
            clips.push(generate_tagged(
                action,
                profile,
                moca,
                params,
                viewpoint,
                clip_seed,
                format!("test/{action}/{i}"),
            )?);
        }
    }
    Ok(clips)
}
