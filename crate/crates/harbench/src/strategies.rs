//! Data-enhancement strategies applied to the imbalanced training set.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use synact_skeleton::{seed, ActionLabel, Condition, JointId, SkeletonClip, Vec3};

use crate::dataset::{sample_subject_profile_for, GenParams, BENCH_ACTIONS};
use crate::error::{BenchError, Result};

/// Parameters for the classic augmentation (rotation, scaling, noise).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicDaParams {
    /// Yaw range in degrees; each augmented clip rotates by U[−r, r].
    pub rotation_deg: f64,
    /// Uniform scale range about the clip's first-frame spine base.
    pub scale_range: (f64, f64),
    /// Per-joint Gaussian position offset, meters, drawn once per clip and
    /// held over time (per-frame noise would inject unphysical speed).
    pub noise_sigma_m: f64,
    /// Output size over input size.
    pub size_factor: f64,
}

impl Default for ClassicDaParams {
    fn default() -> ClassicDaParams {
        ClassicDaParams {
            rotation_deg: 30.0,
            scale_range: (0.9, 1.1),
            noise_sigma_m: 0.01,
            size_factor: 1.5,
        }
    }
}

/// One training-set enhancement strategy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Strategy {
    /// The imbalanced set as-is.
    Vanilla,
    /// Classic augmentation: rotated/scaled/noised copies up to 1.5×.
    ClassicDa {
        #[serde(default = "default_classic")]
        params: ClassicDaParams,
    },
    /// Bootstrap resampling with replacement up to `factor`×.
    Bootstrap {
        #[serde(default = "default_factor")]
        factor: f64,
    },
    /// Append healthy-subject (NC-only) clips, standing in for open-dataset
    /// recordings.
    OpenMix {
        #[serde(default = "default_open_count")]
        count: usize,
    },
    /// Replace the training set with a balanced synthetic one: equal class
    /// counts, conditions split in thirds, viewpoints uniform on [0, 360).
    SyntheticBalanced {
        #[serde(default = "default_per_class")]
        per_class: usize,
    },
}

fn default_classic() -> ClassicDaParams {
    ClassicDaParams::default()
}
fn default_factor() -> f64 {
    1.5
}
fn default_open_count() -> usize {
    100
}
fn default_per_class() -> usize {
    80
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Vanilla => "vanilla",
            Strategy::ClassicDa { .. } => "classic_da",
            Strategy::Bootstrap { .. } => "bootstrap",
            Strategy::OpenMix { .. } => "open_mix",
            Strategy::SyntheticBalanced { .. } => "synthetic_balanced",
        }
    }

    /// The default strategy ladder in report order.
    pub fn default_ladder() -> Vec<Strategy> {
        vec![
            Strategy::Vanilla,
            Strategy::ClassicDa { params: ClassicDaParams::default() },
            Strategy::Bootstrap { factor: 1.5 },
            Strategy::OpenMix { count: 100 },
            Strategy::SyntheticBalanced { per_class: 80 },
        ]
    }

    /// Produce the training set this strategy trains on.
    pub fn apply(
        &self,
        base: &[SkeletonClip],
        params: GenParams,
        seed_value: u64,
    ) -> Result<Vec<SkeletonClip>> {
        match self {
            Strategy::Vanilla => Ok(base.to_vec()),
            Strategy::ClassicDa { params: da } => augment_classic(base, da, seed_value),
            Strategy::Bootstrap { factor } => augment_bootstrap(base, *factor, seed_value),
            Strategy::OpenMix { count } => build_open_mix(base, *count, params, seed_value),
            Strategy::SyntheticBalanced { per_class } => {
                build_synthetic_balanced(*per_class, params, seed_value)
            }
        }
    }
}

fn rotate_about_vertical(clip: &SkeletonClip, center: Vec3, yaw_rad: f64) -> SkeletonClip {
    clip.map_positions(|p| (p - center).rotate_y(yaw_rad) + center)
}

/// Pick which input clips get copied so that the output reaches `target`
/// clips: extras are allocated per class proportionally (largest-remainder
/// rounding), then cycle through each class's clips in order. Stratifying
/// keeps every class's share of the augmentation deterministic instead of
/// leaving small classes to sampling luck.
fn stratified_sources(clips: &[SkeletonClip], target: usize) -> Vec<usize> {
    let mut by_class: std::collections::BTreeMap<ActionLabel, Vec<usize>> =
        std::collections::BTreeMap::new();
    for (i, clip) in clips.iter().enumerate() {
        by_class.entry(clip.action).or_default().push(i);
    }
    let extras = target.saturating_sub(clips.len());
    let mut allocation: Vec<(ActionLabel, usize, f64)> = by_class
        .iter()
        .map(|(action, members)| {
            let share = extras as f64 * members.len() as f64 / clips.len() as f64;
            (*action, share.floor() as usize, share.fract())
        })
        .collect();
    let mut assigned: usize = allocation.iter().map(|(_, n, _)| n).sum();
    allocation.sort_by(|a, b| b.2.total_cmp(&a.2).then(a.0.cmp(&b.0)));
    let classes = allocation.len();
    let mut i = 0;
    while assigned < extras {
        allocation[i % classes].1 += 1;
        assigned += 1;
        i += 1;
    }
    let mut sources = Vec::with_capacity(extras);
    for (action, count, _) in &allocation {
        let members = &by_class[action];
        for k in 0..*count {
            sources.push(members[k % members.len()]);
        }
    }
    sources
}

/// Classic augmentation: keep the originals and append rotated/scaled/
/// noised copies until the set is `size_factor` times larger, allocating
/// copies per class. Labels and subject metadata carry over.
pub fn augment_classic(
    clips: &[SkeletonClip],
    params: &ClassicDaParams,
    seed_value: u64,
) -> Result<Vec<SkeletonClip>> {
    if clips.is_empty() {
        return Err(BenchError::EmptyInput);
    }
    if params.size_factor < 1.0 || params.scale_range.0 > params.scale_range.1 {
        return Err(BenchError::InvalidStrategy(format!("{params:?}")));
    }
    let target = (params.size_factor * clips.len() as f64).ceil() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed::derive(seed_value, "classic_da"));
    let mut out = clips.to_vec();
    for source_index in stratified_sources(clips, target) {
        let source = &clips[source_index];
        let center = source.frames[0].position(JointId::SpineBase);
        let yaw = rng.random_range(-params.rotation_deg..=params.rotation_deg).to_radians();
        let scale = rng.random_range(params.scale_range.0..=params.scale_range.1);
        let sigma = params.noise_sigma_m;
        let mut augmented = rotate_about_vertical(source, center, yaw)
            .map_positions(|p| (p - center).scale(scale) + center);
        if sigma > 0.0 {
            let offsets: Vec<Vec3> = (0..synact_skeleton::JOINT_COUNT)
                .map(|_| {
                    Vec3::new(
                        sigma * rng.sample::<f64, _>(StandardNormal),
                        sigma * rng.sample::<f64, _>(StandardNormal),
                        sigma * rng.sample::<f64, _>(StandardNormal),
                    )
                })
                .collect();
            for pose in augmented.frames.iter_mut() {
                for joint in JointId::ALL {
                    let p = pose.position(joint) + offsets[joint.code()];
                    pose.set_position(joint, p);
                }
            }
        }
        out.push(augmented);
    }
    Ok(out)
}

/// Bootstrap: keep the originals and append with-replacement draws until
/// the set is `factor` times larger, resampling within each class. Every
/// output clip is a member of the input multiset.
pub fn augment_bootstrap(
    clips: &[SkeletonClip],
    factor: f64,
    seed_value: u64,
) -> Result<Vec<SkeletonClip>> {
    if clips.is_empty() {
        return Err(BenchError::EmptyInput);
    }
    if factor < 1.0 {
        return Err(BenchError::InvalidStrategy(format!("bootstrap factor {factor} < 1")));
    }
    let target = (factor * clips.len() as f64).ceil() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed::derive(seed_value, "bootstrap"));
    let mut out = clips.to_vec();
    for source_index in stratified_sources(clips, target) {
        // Resample inside the source clip's class.
        let class = clips[source_index].action;
        let members: Vec<&SkeletonClip> = clips.iter().filter(|c| c.action == class).collect();
        out.push((*members.choose(&mut rng).expect("non-empty class")).clone());
    }
    Ok(out)
}

/// Append `count` healthy-subject clips (NC profiles only) spread
/// round-robin over the benchmark actions.
///
/// The stand-ins keep the NC default posture — stoop at the table value,
/// no stand-up oscillation — and vary only in gait tempo and amplitude, so
/// every appended clip carries the healthy movement signature.
pub fn build_open_mix(
    base: &[SkeletonClip],
    count: usize,
    params: GenParams,
    seed_value: u64,
) -> Result<Vec<SkeletonClip>> {
    use synact_synth::ProfileParam::*;
    let mut out = base.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed::derive(seed_value, "open_mix"));
    let healthy = synact_synth::default_profile(Condition::Nc, None)?;
    for i in 0..count {
        let action = BENCH_ACTIONS[i % BENCH_ACTIONS.len()];
        let mut profile = healthy.clone();
        for param in [GaitCadenceHz, StrideLengthM, WalkSpeedMps, ArmSwingAmpDeg, TurnRateDps, SpeedJitter] {
            let factor = rng.random_range(0.85..1.2);
            let value = param.get(&profile) * factor;
            param.set(&mut profile, value);
        }
        let profile = profile.clamped(&synact_synth::default_table().bounds);
        let request = synact_synth::GenerationRequest {
            action,
            profile,
            duration_s: params.duration_s,
            fps: params.fps,
            viewpoint_deg: rng.random_range(0.0..360.0),
            seed: rng.random::<u64>(),
        };
        let mut clip = synact_synth::generate_clip(&request)?;
        clip.metadata.subject_id = format!("open/{i}");
        clip.metadata.moca_score = Some(28 + (i % 3) as u8);
        out.push(clip);
    }
    Ok(out)
}

/// Balanced synthetic training set: `per_class` clips per action, condition
/// mix within ±1 of thirds (round-robin), viewpoints uniform on [0, 360).
pub fn build_synthetic_balanced(
    per_class: usize,
    params: GenParams,
    seed_value: u64,
) -> Result<Vec<SkeletonClip>> {
    if per_class == 0 {
        return Err(BenchError::InvalidStrategy("per_class must be ≥ 1".into()));
    }
    let conditions = [Condition::Ad, Condition::Mci, Condition::Nc];
    let mut out = Vec::with_capacity(per_class * BENCH_ACTIONS.len());
    for action in BENCH_ACTIONS {
        let stream = seed::derive(seed_value, &format!("synthetic_balanced/{action}"));
        let mut rng = ChaCha8Rng::seed_from_u64(stream);
        for i in 0..per_class {
            let condition = conditions[i % conditions.len()];
            let (profile, moca) = sample_subject_profile_for(condition, &mut rng);
            let request = synact_synth::GenerationRequest {
                action,
                profile,
                duration_s: params.duration_s,
                fps: params.fps,
                viewpoint_deg: rng.random_range(0.0..360.0),
                seed: rng.random::<u64>(),
            };
            let mut clip = synact_synth::generate_clip(&request)?;
            clip.metadata.subject_id = format!("synth-balanced/{action}/{i}");
            clip.metadata.moca_score = Some(moca);
            out.push(clip);
        }
    }
    Ok(out)
}
