//! Condition-conditioned clip generation.
//!
//! Each action is realized by a kinematic template driven by the profile
//! parameters: walking is a sinusoidal gait with cadence/stride/arm-swing,
//! sit-to-stand is a seated→standing trajectory whose neck makes exactly
//! `standup_oscillation_count` vertical-velocity sign reversals during the
//! transition and ends at `stoop_angle_deg` of trunk pitch, turning is a
//! stepped in-place yaw at `turn_rate_dps`, and the postures are holds with
//! `speed_jitter`-scaled tremor.
//!
//! Generation is pure and seed-deterministic: the RNG draw layout depends
//! only on the frame count, never on parameter values or viewpoint, so the
//! same seed reproduces the same motion bit for bit and the viewpoint only
//! applies a final rigid rotation.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use synact_skeleton::{ActionLabel, Pose, SkeletonClip, SubjectMetadata, Vec3};

use crate::body::{build_pose, BodyModel, PoseSpec};
use crate::config::default_table;
use crate::error::{Result, SynthError};
use crate::profile::ConditionProfile;

/// Camera-frame placement of the subject anchor: the camera sits 1 m above
/// the floor and the subject works around a point 3 m down the optical axis.
pub const SUBJECT_PLACEMENT: Vec3 = Vec3 { x: 0.0, y: -1.0, z: 3.0 };

/// Fraction of the clip where the sit-to-stand transition starts and ends.
pub const TRANSITION_START_FRAC: f64 = 0.2;
pub const TRANSITION_END_FRAC: f64 = 0.7;

/// One generation request. Identical requests produce bit-identical clips.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationRequest {
    pub action: ActionLabel,
    pub profile: ConditionProfile,
    pub duration_s: f64,
    pub fps: f64,
    pub viewpoint_deg: f64,
    pub seed: u64,
}

impl GenerationRequest {
    pub fn new(action: ActionLabel, profile: ConditionProfile, seed: u64) -> GenerationRequest {
        GenerationRequest {
            action,
            profile,
            duration_s: 3.0,
            fps: 30.0,
            viewpoint_deg: 0.0,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.duration_s.is_finite() && self.duration_s > 0.0) {
            return Err(SynthError::InvalidRequest(format!(
                "duration_s {} not positive",
                self.duration_s
            )));
        }
        if !(self.fps.is_finite() && self.fps > 0.0) {
            return Err(SynthError::InvalidRequest(format!("fps {} not positive", self.fps)));
        }
        if !(0.0..360.0).contains(&self.viewpoint_deg) {
            return Err(SynthError::InvalidRequest(format!(
                "viewpoint_deg {} outside [0, 360)",
                self.viewpoint_deg
            )));
        }
        let frames = self.duration_s * self.fps;
        if frames > 1_000_000.0 {
            return Err(SynthError::InvalidRequest(format!("{frames} frames is unreasonable")));
        }
        self.profile.validate(&default_table().bounds)?;
        Ok(())
    }

    fn frame_count(&self) -> usize {
        ((self.duration_s * self.fps).round() as usize).max(2)
    }
}

/// Per-subject trait draws: fixed count so the RNG layout is identical for
/// every action.
///
/// The trait ranges deliberately make neighboring postures overlap across
/// subjects — a deep recliner rest looks like slumped sitting, a hesitant
/// stepped turn looks like standing weight shifts — mirroring how ambiguous
/// real elderly home activity is.
struct SubjectTraits {
    slump: f64,
    lie_recline: f64,
    lie_knee: f64,
    sway_phase_a: f64,
    sway_phase_b: f64,
    turn_dir: f64,
    breath_phase: f64,
    gait_phase: f64,
    turn_step: f64,
    turn_period: f64,
    sway_amp: f64,
    sway_period: f64,
    sit_legs: f64,
    sit_flex: f64,
}

impl SubjectTraits {
    fn draw(rng: &mut ChaCha8Rng) -> SubjectTraits {
        let tau = std::f64::consts::TAU;
        SubjectTraits {
            slump: rng.random::<f64>(),
            lie_recline: rng.random::<f64>(),
            lie_knee: rng.random::<f64>(),
            sway_phase_a: rng.random::<f64>() * tau,
            sway_phase_b: rng.random::<f64>() * tau,
            turn_dir: if rng.random::<f64>() < 0.5 { -1.0 } else { 1.0 },
            breath_phase: rng.random::<f64>() * tau,
            gait_phase: rng.random::<f64>() * tau,
            turn_step: rng.random::<f64>(),
            turn_period: rng.random::<f64>(),
            sway_amp: rng.random::<f64>(),
            sway_period: rng.random::<f64>(),
            sit_legs: rng.random::<f64>(),
            sit_flex: rng.random::<f64>(),
        }
    }
}

/// Per-frame kinematic noise (phase, forward-speed, turn-rate channels).
struct FrameNoise {
    phase: Vec<f64>,
    speed: Vec<f64>,
    omega: Vec<f64>,
}

impl FrameNoise {
    fn draw(rng: &mut ChaCha8Rng, frames: usize) -> FrameNoise {
        let mut take = |n: usize| -> Vec<f64> {
            (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
        };
        FrameNoise { phase: take(frames), speed: take(frames), omega: take(frames) }
    }
}

fn smoothstep(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    x * x * (3.0 - 2.0 * x)
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    a + (b - a) * t
}

/// Turning points of the leg-extension curve for a sit-to-stand rise with
/// exactly `count` vertical-velocity sign reversals: an initial crouch-dip
/// when the count is odd, plus one interior dip per remaining pair.
fn rise_turning_points(count: u32, dip: f64) -> Vec<f64> {
    let mut points = vec![0.0];
    if count % 2 == 1 {
        points.push(-0.9 * dip);
    }
    let pairs = count / 2;
    for i in 1..=pairs {
        let c = i as f64 / (pairs + 1) as f64;
        points.push((c + dip / 2.0).min(0.97));
        points.push(c - dip / 2.0);
    }
    points.push(1.0);
    points
}

/// Piecewise-smoothstep interpolation through the turning points; velocity
/// vanishes at every turning point, so each sign reversal is clean.
fn rise_extension(points: &[f64], v: f64) -> f64 {
    let runs = points.len() - 1;
    let scaled = (v.clamp(0.0, 1.0)) * runs as f64;
    let seg = (scaled.floor() as usize).min(runs - 1);
    let local = scaled - seg as f64;
    lerp(points[seg], points[seg + 1], smoothstep(local))
}

struct Generator<'a> {
    model: BodyModel,
    profile: &'a ConditionProfile,
    traits: SubjectTraits,
    noise: FrameNoise,
    dt: f64,
    frames: usize,
}

impl Generator<'_> {
    fn stoop_rad(&self) -> f64 {
        self.profile.stoop_angle_deg.to_radians()
    }

    fn bulge(&self, t_s: f64) -> f64 {
        0.012
            + 0.022 * (self.profile.stoop_angle_deg / 45.0)
            + 0.003 * (2.1 * t_s + self.traits.sway_phase_b).sin()
    }

    fn breath(&self, t_s: f64) -> f64 {
        let amp = f64::to_radians(1.2) * (1.0 + self.profile.speed_jitter);
        amp * (std::f64::consts::TAU * 0.27 * t_s + self.traits.breath_phase).sin()
    }

    fn head_pitch(&self, trunk_pitch: f64, t_s: f64) -> f64 {
        0.45 * trunk_pitch + f64::to_radians(2.0) * (1.7 * t_s + self.traits.sway_phase_a).sin()
    }

    /// Slow postural yaw sway: elderly upright postures involve continuous
    /// small trunk rotation around vertical.
    fn yaw_sway(&self, t_s: f64) -> f64 {
        let amp = f64::to_radians(3.0 + 5.0 * self.traits.sway_amp);
        let period = 3.0 + 4.0 * self.traits.sway_period;
        amp * (std::f64::consts::TAU * t_s / period + self.traits.sway_phase_a).sin()
    }

    /// Sum of smooth yaw step events up to time `t_s`. Each event ramps over
    /// `burst_s`; `step(k)` gives the signed size of the k-th event. This is
    /// the shared mechanism behind standing weight shifts (alternating
    /// direction, no net rotation) and stepped in-place turning (one
    /// direction, rotation accumulates), which is what makes hesitant slow
    /// turners and restless standers shade into each other.
    fn yaw_steps(&self, t_s: f64, first_s: f64, interval_s: f64, burst_s: f64, step: impl Fn(usize) -> f64) -> f64 {
        let mut total = 0.0;
        let mut k = 0usize;
        loop {
            let start = first_s + k as f64 * interval_s;
            if start >= t_s + burst_s || k > 100_000 {
                break;
            }
            total += step(k) * smoothstep((t_s - start) / burst_s);
            k += 1;
        }
        total
    }

    /// Standing-style repositioning shifts: alternating look-around yaw
    /// steps whose size varies a lot between subjects.
    fn standing_shifts(&self, t_s: f64) -> f64 {
        let interval = 1.5 + 3.0 * self.traits.turn_period;
        let amp = f64::to_radians(5.0 + 28.0 * self.traits.sway_amp.sqrt());
        self.yaw_steps(t_s, 0.3 * interval, interval, 0.8, |k| {
            if k % 2 == 0 {
                amp
            } else {
                -amp
            }
        })
    }

    fn standing_spec(&self, t_s: f64, facing: f64) -> PoseSpec {
        let thigh = f64::to_radians(3.0);
        let shank = f64::to_radians(1.0);
        let pitch = self.stoop_rad() + self.breath(t_s);
        let sway = 0.012 * (std::f64::consts::TAU * 0.2 * t_s + self.traits.sway_phase_b).sin();
        let pelvis = Vec3::new(
            0.0,
            self.model.hip_height(thigh, shank) + self.model.hip_drop,
            sway,
        );
        PoseSpec {
            pelvis,
            facing: facing + self.yaw_sway(t_s) + self.standing_shifts(t_s),
            trunk_pitch: pitch,
            spine_bulge: self.bulge(t_s),
            head_pitch: self.head_pitch(pitch, t_s),
            thigh_pitch_left: thigh,
            thigh_pitch_right: thigh,
            shank_pitch_left: shank,
            shank_pitch_right: shank,
            arm_pitch_left: f64::to_radians(3.0) + 0.25 * self.breath(t_s),
            arm_pitch_right: f64::to_radians(3.0) - 0.25 * self.breath(t_s),
            elbow_flex: f64::to_radians(18.0),
            recline: 0.0,
        }
    }

    fn walking_spec(&self, t_s: f64, phase: f64, forward: f64) -> PoseSpec {
        let p = self.profile;
        let leg = self.model.leg_length();
        let hip_amp = (p.stride_length_m / (4.0 * leg)).clamp(0.0, 0.95).asin();
        let knee_amp = 0.30 + 0.6 * hip_amp;
        let arm_amp = p.arm_swing_amp_deg.to_radians();

        let thigh_l = hip_amp * phase.sin();
        let thigh_r = hip_amp * (phase + std::f64::consts::PI).sin();
        let bend_l = knee_amp * (1.0 - (phase + 0.9).cos()) / 2.0 + 0.04;
        let bend_r = knee_amp * (1.0 - (phase + std::f64::consts::PI + 0.9).cos()) / 2.0 + 0.04;
        let shank_l = thigh_l - bend_l;
        let shank_r = thigh_r - bend_r;

        let stance_height = self
            .model
            .hip_height(thigh_l, shank_l)
            .max(self.model.hip_height(thigh_r, shank_r));
        let pitch = self.stoop_rad() + f64::to_radians(0.8) * (2.0 * phase).sin();
        PoseSpec {
            pelvis: Vec3::new(forward, stance_height + self.model.hip_drop, 0.0),
            facing: 0.0,
            trunk_pitch: pitch,
            spine_bulge: self.bulge(t_s),
            head_pitch: self.head_pitch(pitch, t_s),
            thigh_pitch_left: thigh_l,
            thigh_pitch_right: thigh_r,
            shank_pitch_left: shank_l,
            shank_pitch_right: shank_r,
            arm_pitch_left: arm_amp * (phase + std::f64::consts::PI).sin(),
            arm_pitch_right: arm_amp * phase.sin(),
            elbow_flex: f64::to_radians(22.0),
            recline: 0.0,
        }
    }

    fn seated_legs(&self, extension: f64) -> (f64, f64) {
        let thigh = lerp(f64::to_radians(88.0), f64::to_radians(3.0), extension);
        let shank = lerp(f64::to_radians(4.0), f64::to_radians(1.0), extension);
        (thigh, shank)
    }

    fn sit_pitch(&self) -> f64 {
        f64::to_radians(10.0 + 0.45 * self.profile.stoop_angle_deg + 14.0 * self.traits.slump)
    }

    /// Pose with the feet planted: the hip glides so the ankles stay at a
    /// fixed scene point through the sit/stand transition.
    fn planted_spec(&self, t_s: f64, (thigh, shank): (f64, f64), pitch: f64, arm_reach: f64) -> PoseSpec {
        let hip_x = -(self.model.thigh * thigh.sin() + self.model.shank * shank.sin());
        let hip_y =
            self.model.ankle_height + self.model.thigh * thigh.cos() + self.model.shank * shank.cos();
        PoseSpec {
            pelvis: Vec3::new(hip_x, hip_y + self.model.hip_drop, 0.0),
            facing: 0.0,
            trunk_pitch: pitch,
            spine_bulge: self.bulge(t_s),
            head_pitch: self.head_pitch(pitch, t_s),
            thigh_pitch_left: thigh,
            thigh_pitch_right: thigh,
            shank_pitch_left: shank,
            shank_pitch_right: shank,
            arm_pitch_left: f64::to_radians(8.0) + arm_reach,
            arm_pitch_right: f64::to_radians(8.0) + arm_reach,
            elbow_flex: f64::to_radians(40.0),
            recline: 0.0,
        }
    }

    /// The subject's resting seated posture: trunk pitch (grows with the
    /// slump trait and condition stoop), thigh pitch and knee flexion.
    /// Shared between sustained sitting and the steep end of reclined rest.
    fn seated_posture(&self) -> (f64, f64, f64) {
        let pitch = f64::to_radians(10.0 + 0.45 * self.profile.stoop_angle_deg)
            + f64::to_radians(24.0) * self.traits.slump;
        let thigh = f64::to_radians(70.0 + 25.0 * self.traits.sit_legs);
        let flexion = f64::to_radians(60.0 + 35.0 * self.traits.sit_flex);
        (pitch, thigh, flexion)
    }

    fn resting_arms(&self) -> (f64, f64) {
        (
            f64::to_radians(6.0 + 14.0 * self.traits.sit_flex),
            f64::to_radians(35.0 + 25.0 * self.traits.slump),
        )
    }

    fn sitting_spec(&self, t_s: f64) -> PoseSpec {
        // Sustained sitting varies per subject: deeply slumped sitters
        // approach the shallow end of reclined rest, legs range from tucked
        // to extended.
        let (pitch, thigh, flexion) = self.seated_posture();
        let (arm, elbow) = self.resting_arms();
        let mut spec =
            self.planted_spec(t_s, (thigh, thigh - flexion), pitch + self.breath(t_s), 0.0);
        spec.facing += 0.5 * self.yaw_sway(t_s);
        spec.arm_pitch_left = arm;
        spec.arm_pitch_right = arm;
        spec.elbow_flex = elbow;
        spec
    }

    /// Sit-to-stand at clip fraction `u` (reversed for stand-to-sit).
    fn transition_spec(&self, t_s: f64, u: f64, rise: &[f64]) -> PoseSpec {
        let v = ((u - TRANSITION_START_FRAC) / (TRANSITION_END_FRAC - TRANSITION_START_FRAC))
            .clamp(0.0, 1.0);
        let extension = rise_extension(rise, v);
        // sin² keeps the lean's initial slope at zero so the forward bow
        // never outruns the legs and dips the neck at lift-off.
        let bow = (std::f64::consts::PI * v).sin().powi(2);
        let lean = f64::to_radians(5.0) * bow;
        let pitch = lerp(self.sit_pitch(), self.stoop_rad(), smoothstep(v)) + lean;
        let reach = f64::to_radians(14.0) * bow;
        self.planted_spec(t_s, self.seated_legs(extension), pitch, reach)
    }

    fn lying_spec(&self, t_s: f64) -> PoseSpec {
        // Reclined rest is the subject's own seated posture rotated back in
        // a rest chair, flattening toward a bed with the recline trait: at
        // the steep end only the small recline separates it from that
        // subject's sitting; at the flat end the body lies straight.
        let how_flat = self.traits.lie_recline.powi(5);
        let (sit_pitch, sit_thigh, sit_flexion) = self.seated_posture();
        let (arm, elbow) = self.resting_arms();
        let recline = -f64::to_radians(10.0 + 78.0 * how_flat);
        let pitch = lerp(sit_pitch, f64::to_radians(3.0), how_flat) + self.breath(t_s);
        let thigh = lerp(sit_thigh, f64::to_radians(10.0), how_flat)
            + f64::to_radians(8.0) * (self.traits.lie_knee - 0.5);
        let flexion = lerp(sit_flexion, f64::to_radians(14.0), how_flat);
        let shank = thigh - flexion;
        PoseSpec {
            pelvis: Vec3::new(0.0, 0.55 - 0.32 * how_flat, 0.0),
            facing: 0.0,
            trunk_pitch: pitch,
            spine_bulge: self.bulge(t_s),
            head_pitch: self.head_pitch(pitch, t_s),
            thigh_pitch_left: thigh,
            thigh_pitch_right: thigh * 0.96,
            shank_pitch_left: shank,
            shank_pitch_right: shank * 0.96,
            arm_pitch_left: arm,
            arm_pitch_right: arm,
            elbow_flex: elbow,
            recline,
        }
    }

    fn specs(&self, action: ActionLabel) -> Vec<PoseSpec> {
        let p = self.profile;
        let tau = std::f64::consts::TAU;
        match action {
            ActionLabel::Standing => (0..self.frames)
                .map(|t| self.standing_spec(t as f64 * self.dt, 0.0))
                .collect(),
            ActionLabel::Sitting => (0..self.frames)
                .map(|t| self.sitting_spec(t as f64 * self.dt))
                .collect(),
            ActionLabel::Lying => (0..self.frames)
                .map(|t| self.lying_spec(t as f64 * self.dt))
                .collect(),
            ActionLabel::Turning => {
                // In-place turning proceeds in steps: directional yaw events
                // at the profile's turn rate separated by standing pauses.
                let dir = self.traits.turn_dir;
                let interval = 1.3 + 3.0 * self.traits.turn_period;
                let burst = 0.7;
                let step_size = p.turn_rate_dps.to_radians() * (0.25 + 0.6 * self.traits.turn_step);
                (0..self.frames)
                    .map(|t| {
                        let t_s = t as f64 * self.dt;
                        let turned = self.yaw_steps(t_s, 0.2 * interval, interval, burst, |k| {
                            let wobble =
                                1.0 + 0.5 * p.speed_jitter * self.noise.omega[k % self.frames];
                            dir * step_size * wobble.clamp(0.05, 3.0)
                        });
                        self.standing_spec(t_s, self.traits.gait_phase + turned)
                    })
                    .collect()
            }
            ActionLabel::Walking => {
                // Integrate phase and forward travel with jittered rates,
                // then center the path on the anchor.
                let mut phase = self.traits.gait_phase;
                let mut x = 0.0;
                let mut states = Vec::with_capacity(self.frames);
                for t in 0..self.frames {
                    states.push((phase, x));
                    phase += tau
                        * p.gait_cadence_hz
                        * self.dt
                        * (1.0 + p.speed_jitter * self.noise.phase[t]).clamp(0.05, 3.0);
                    x += p.walk_speed_mps
                        * self.dt
                        * (1.0 + p.speed_jitter * self.noise.speed[t]).clamp(0.05, 3.0);
                }
                let center = (states[0].1 + states[self.frames - 1].1) / 2.0;
                states
                    .iter()
                    .enumerate()
                    .map(|(t, (phase, x))| {
                        self.walking_spec(t as f64 * self.dt, *phase, x - center)
                    })
                    .collect()
            }
            ActionLabel::SitToStand | ActionLabel::StandToSit => {
                // Floor the dip so a nonzero count keeps its reversals even
                // when the amplitude parameter sits at the bottom of its
                // range.
                let dip = (p.standup_oscillation_amp_m / 0.40).clamp(0.06, 0.22);
                let rise = rise_turning_points(p.standup_oscillation_count, dip);
                let last = (self.frames - 1) as f64;
                (0..self.frames)
                    .map(|t| {
                        let u = t as f64 / last;
                        let u = if action == ActionLabel::SitToStand { u } else { 1.0 - u };
                        self.transition_spec(t as f64 * self.dt, u, &rise)
                    })
                    .collect()
            }
        }
    }
}

/// Generate a clip from a request. Deterministic for a fixed request; the
/// viewpoint is applied as a final rigid yaw about the subject anchor, so
/// every angle and speed feature is independent of it.
pub fn generate_clip(request: &GenerationRequest) -> Result<SkeletonClip> {
    request.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(request.seed);
    let frames = request.frame_count();
    let generator = Generator {
        model: BodyModel::default(),
        profile: &request.profile,
        traits: SubjectTraits::draw(&mut rng),
        noise: FrameNoise::draw(&mut rng, frames),
        dt: 1.0 / request.fps,
        frames,
    };

    let specs = generator.specs(request.action);

    // Horizontal tremor in the scene frame; the vertical channel stays
    // template-clean so the stand-up oscillation signature is well defined.
    let sigma = 0.001 * (1.0 + 6.0 * request.profile.speed_jitter);
    let viewpoint = request.viewpoint_deg.to_radians();
    let mut out_frames = Vec::with_capacity(frames);
    for spec in &specs {
        let pose = build_pose(&generator.model, spec);
        let mut jittered = Pose::origin();
        for joint in synact_skeleton::JointId::ALL {
            let nx: f64 = rng.sample(StandardNormal);
            let nz: f64 = rng.sample(StandardNormal);
            let p = pose.position(joint) + Vec3::new(sigma * nx, 0.0, sigma * nz);
            jittered.set_position(joint, p.rotate_y(viewpoint) + SUBJECT_PLACEMENT);
        }
        out_frames.push(jittered);
    }

    let metadata = SubjectMetadata::new(
        request.profile.condition,
        format!("synth/{:016x}", request.seed),
    );
    Ok(SkeletonClip::new(
        request.fps,
        out_frames,
        metadata,
        request.action,
        request.viewpoint_deg,
    )?)
}
