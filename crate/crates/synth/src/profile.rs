//! Condition profiles: the kinematic parameter vector conditioned on
//! cognitive state.

use serde::{Deserialize, Serialize};
use synact_skeleton::Condition;

use crate::config::default_table;
use crate::error::{Result, SynthError};

/// Kinematic generator parameters for one subject condition.
///
/// All magnitudes live inside the bounds table shipped with the crate
/// (`config/default_profiles.toml`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionProfile {
    pub condition: Condition,
    /// Stride cycles per second while walking.
    pub gait_cadence_hz: f64,
    /// Full gait-cycle length in meters.
    pub stride_length_m: f64,
    /// Forward walking speed in m/s.
    pub walk_speed_mps: f64,
    /// Forward trunk pitch held in upright postures, degrees from vertical.
    pub stoop_angle_deg: f64,
    /// Vertical-velocity sign reversals of the neck during a sit-to-stand
    /// transition.
    pub standup_oscillation_count: u32,
    /// Depth of each stand-up oscillation dip, meters at the neck.
    pub standup_oscillation_amp_m: f64,
    /// Arm swing amplitude while walking, degrees.
    pub arm_swing_amp_deg: f64,
    /// In-place turning rate, degrees per second.
    pub turn_rate_dps: f64,
    /// Unitless motor-noise level scaling tremor and timing variability.
    pub speed_jitter: f64,
}

/// Inclusive parameter bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileBounds {
    pub gait_cadence_hz: (f64, f64),
    pub stride_length_m: (f64, f64),
    pub walk_speed_mps: (f64, f64),
    pub stoop_angle_deg: (f64, f64),
    pub standup_oscillation_count: (u32, u32),
    pub standup_oscillation_amp_m: (f64, f64),
    pub arm_swing_amp_deg: (f64, f64),
    pub turn_rate_dps: (f64, f64),
    pub speed_jitter: (f64, f64),
}

/// The continuously-valued profile fields, used for interpolation, jitter
/// and fitting. The oscillation count is handled separately as an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProfileParam {
    GaitCadenceHz,
    StrideLengthM,
    WalkSpeedMps,
    StoopAngleDeg,
    StandupOscillationAmpM,
    ArmSwingAmpDeg,
    TurnRateDps,
    SpeedJitter,
}

impl ProfileParam {
    pub const ALL: [ProfileParam; 8] = [
        ProfileParam::GaitCadenceHz,
        ProfileParam::StrideLengthM,
        ProfileParam::WalkSpeedMps,
        ProfileParam::StoopAngleDeg,
        ProfileParam::StandupOscillationAmpM,
        ProfileParam::ArmSwingAmpDeg,
        ProfileParam::TurnRateDps,
        ProfileParam::SpeedJitter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProfileParam::GaitCadenceHz => "gait_cadence_hz",
            ProfileParam::StrideLengthM => "stride_length_m",
            ProfileParam::WalkSpeedMps => "walk_speed_mps",
            ProfileParam::StoopAngleDeg => "stoop_angle_deg",
            ProfileParam::StandupOscillationAmpM => "standup_oscillation_amp_m",
            ProfileParam::ArmSwingAmpDeg => "arm_swing_amp_deg",
            ProfileParam::TurnRateDps => "turn_rate_dps",
            ProfileParam::SpeedJitter => "speed_jitter",
        }
    }

    pub fn get(self, p: &ConditionProfile) -> f64 {
        match self {
            ProfileParam::GaitCadenceHz => p.gait_cadence_hz,
            ProfileParam::StrideLengthM => p.stride_length_m,
            ProfileParam::WalkSpeedMps => p.walk_speed_mps,
            ProfileParam::StoopAngleDeg => p.stoop_angle_deg,
            ProfileParam::StandupOscillationAmpM => p.standup_oscillation_amp_m,
            ProfileParam::ArmSwingAmpDeg => p.arm_swing_amp_deg,
            ProfileParam::TurnRateDps => p.turn_rate_dps,
            ProfileParam::SpeedJitter => p.speed_jitter,
        }
    }

    pub fn set(self, p: &mut ConditionProfile, value: f64) {
        match self {
            ProfileParam::GaitCadenceHz => p.gait_cadence_hz = value,
            ProfileParam::StrideLengthM => p.stride_length_m = value,
            ProfileParam::WalkSpeedMps => p.walk_speed_mps = value,
            ProfileParam::StoopAngleDeg => p.stoop_angle_deg = value,
            ProfileParam::StandupOscillationAmpM => p.standup_oscillation_amp_m = value,
            ProfileParam::ArmSwingAmpDeg => p.arm_swing_amp_deg = value,
            ProfileParam::TurnRateDps => p.turn_rate_dps = value,
            ProfileParam::SpeedJitter => p.speed_jitter = value,
        }
    }

    pub fn bounds(self, b: &ProfileBounds) -> (f64, f64) {
        match self {
            ProfileParam::GaitCadenceHz => b.gait_cadence_hz,
            ProfileParam::StrideLengthM => b.stride_length_m,
            ProfileParam::WalkSpeedMps => b.walk_speed_mps,
            ProfileParam::StoopAngleDeg => b.stoop_angle_deg,
            ProfileParam::StandupOscillationAmpM => b.standup_oscillation_amp_m,
            ProfileParam::ArmSwingAmpDeg => b.arm_swing_amp_deg,
            ProfileParam::TurnRateDps => b.turn_rate_dps,
            ProfileParam::SpeedJitter => b.speed_jitter,
        }
    }
}

impl ConditionProfile {
    /// Validate every field against a bounds table.
    pub fn validate(&self, bounds: &ProfileBounds) -> Result<()> {
        for param in ProfileParam::ALL {
            let value = param.get(self);
            let (lo, hi) = param.bounds(bounds);
            if !value.is_finite() || value < lo || value > hi {
                return Err(SynthError::ProfileOutOfBounds {
                    field: param.name(),
                    value,
                    lo,
                    hi,
                });
            }
        }
        let (lo, hi) = bounds.standup_oscillation_count;
        if self.standup_oscillation_count < lo || self.standup_oscillation_count > hi {
            return Err(SynthError::ProfileOutOfBounds {
                field: "standup_oscillation_count",
                value: self.standup_oscillation_count as f64,
                lo: lo as f64,
                hi: hi as f64,
            });
        }
        Ok(())
    }

    /// Copy with every field clamped into the bounds table.
    pub fn clamped(&self, bounds: &ProfileBounds) -> ConditionProfile {
        let mut out = self.clone();
        for param in ProfileParam::ALL {
            let (lo, hi) = param.bounds(bounds);
            param.set(&mut out, param.get(self).clamp(lo, hi));
        }
        let (lo, hi) = bounds.standup_oscillation_count;
        out.standup_oscillation_count = out.standup_oscillation_count.clamp(lo, hi);
        out
    }
}

/// Default profile for a condition, optionally conditioned on a MoCA score.
///
/// Without a score this is the condition's anchor row from the shipped
/// table. With a score, each parameter is linearly interpolated between the
/// neighboring anchor rows (AD at 9, MCI at 22, NC at 28); scores outside
/// the anchor range extrapolate along the nearest segment and clamp to the
/// bounds table. Lower scores monotonically slow the walk and deepen the
/// stoop. The oscillation count interpolates in the same way and rounds to
/// the nearest integer.
pub fn default_profile(condition: Condition, moca_score: Option<u8>) -> Result<ConditionProfile> {
    let table = default_table();
    let moca = match moca_score {
        None => return Ok(table.row(condition).profile.clone()),
        Some(m) if m > 30 => return Err(SynthError::MocaOutOfRange(m)),
        Some(m) => f64::from(m),
    };

    let rows = table.rows_by_moca();
    // Pick the segment to interpolate (or extrapolate) on.
    let (lo_row, hi_row) = if moca <= f64::from(rows[1].moca_anchor) {
        (rows[0], rows[1])
    } else {
        (rows[1], rows[2])
    };
    let span = f64::from(hi_row.moca_anchor) - f64::from(lo_row.moca_anchor);
    let t = (moca - f64::from(lo_row.moca_anchor)) / span;

    let mut out = table.row(condition).profile.clone();
    out.condition = condition;
    for param in ProfileParam::ALL {
        let a = param.get(&lo_row.profile);
        let b = param.get(&hi_row.profile);
        param.set(&mut out, a + (b - a) * t);
    }
    let count_a = lo_row.profile.standup_oscillation_count as f64;
    let count_b = hi_row.profile.standup_oscillation_count as f64;
    let count = (count_a + (count_b - count_a) * t).round();
    let (clo, chi) = table.bounds.standup_oscillation_count;
    out.standup_oscillation_count = (count.max(0.0) as u32).clamp(clo, chi);
    Ok(out.clamped(&table.bounds))
}
