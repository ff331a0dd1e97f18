//! Parameter table shipped with the crate.
//!
//! The per-condition defaults, parameter bounds and the stage-3 loss weight
//! live in `config/default_profiles.toml`, embedded at compile time so the
//! library works without filesystem setup. The file is data, not code: the
//! repository's example outputs all derive from the values in it.

use std::sync::LazyLock;

use serde::Deserialize;
use synact_skeleton::Condition;

use crate::profile::{ConditionProfile, ProfileBounds};

const DEFAULT_PROFILES_TOML: &str = include_str!("../config/default_profiles.toml");

#[derive(Debug, Deserialize)]
struct RawTable {
    stage3: RawStage3,
    bounds: RawBounds,
    nc: RawRow,
    mci: RawRow,
    ad: RawRow,
}

#[derive(Debug, Deserialize)]
struct RawStage3 {
    alpha: f64,
}

#[derive(Debug, Deserialize)]
struct RawBounds {
    gait_cadence_hz: [f64; 2],
    stride_length_m: [f64; 2],
    walk_speed_mps: [f64; 2],
    stoop_angle_deg: [f64; 2],
    standup_oscillation_count: [u32; 2],
    standup_oscillation_amp_m: [f64; 2],
    arm_swing_amp_deg: [f64; 2],
    turn_rate_dps: [f64; 2],
    speed_jitter: [f64; 2],
}

#[derive(Debug, Deserialize)]
struct RawRow {
    moca_anchor: u8,
    gait_cadence_hz: f64,
    stride_length_m: f64,
    walk_speed_mps: f64,
    stoop_angle_deg: f64,
    standup_oscillation_count: u32,
    standup_oscillation_amp_m: f64,
    arm_swing_amp_deg: f64,
    turn_rate_dps: f64,
    speed_jitter: f64,
}

/// One anchor row: the default profile for a condition plus the MoCA score
/// the row is anchored at.
#[derive(Debug, Clone)]
pub struct AnchorRow {
    pub moca_anchor: u8,
    pub profile: ConditionProfile,
}

/// The parsed parameter table.
#[derive(Debug, Clone)]
pub struct ProfileTable {
    pub stage3_alpha: f64,
    pub bounds: ProfileBounds,
    pub nc: AnchorRow,
    pub mci: AnchorRow,
    pub ad: AnchorRow,
}

impl ProfileTable {
    pub fn row(&self, condition: Condition) -> &AnchorRow {
        match condition {
            Condition::Nc => &self.nc,
            Condition::Mci => &self.mci,
            Condition::Ad => &self.ad,
        }
    }

    /// Rows ordered by ascending MoCA anchor (AD, MCI, NC).
    pub fn rows_by_moca(&self) -> [&AnchorRow; 3] {
        [&self.ad, &self.mci, &self.nc]
    }
}

fn row_to_profile(condition: Condition, row: &RawRow) -> ConditionProfile {
    ConditionProfile {
        condition,
        gait_cadence_hz: row.gait_cadence_hz,
        stride_length_m: row.stride_length_m,
        walk_speed_mps: row.walk_speed_mps,
        stoop_angle_deg: row.stoop_angle_deg,
        standup_oscillation_count: row.standup_oscillation_count,
        standup_oscillation_amp_m: row.standup_oscillation_amp_m,
        arm_swing_amp_deg: row.arm_swing_amp_deg,
        turn_rate_dps: row.turn_rate_dps,
        speed_jitter: row.speed_jitter,
    }
}

static TABLE: LazyLock<ProfileTable> = LazyLock::new(|| {
    let raw: RawTable =
        toml::from_str(DEFAULT_PROFILES_TOML).expect("embedded profile table must parse");
    let b = &raw.bounds;
    ProfileTable {
        stage3_alpha: raw.stage3.alpha,
        bounds: ProfileBounds {
            gait_cadence_hz: (b.gait_cadence_hz[0], b.gait_cadence_hz[1]),
            stride_length_m: (b.stride_length_m[0], b.stride_length_m[1]),
            walk_speed_mps: (b.walk_speed_mps[0], b.walk_speed_mps[1]),
            stoop_angle_deg: (b.stoop_angle_deg[0], b.stoop_angle_deg[1]),
            standup_oscillation_count: (b.standup_oscillation_count[0], b.standup_oscillation_count[1]),
            standup_oscillation_amp_m: (b.standup_oscillation_amp_m[0], b.standup_oscillation_amp_m[1]),
            arm_swing_amp_deg: (b.arm_swing_amp_deg[0], b.arm_swing_amp_deg[1]),
            turn_rate_dps: (b.turn_rate_dps[0], b.turn_rate_dps[1]),
            speed_jitter: (b.speed_jitter[0], b.speed_jitter[1]),
        },
        nc: AnchorRow { moca_anchor: raw.nc.moca_anchor, profile: row_to_profile(Condition::Nc, &raw.nc) },
        mci: AnchorRow { moca_anchor: raw.mci.moca_anchor, profile: row_to_profile(Condition::Mci, &raw.mci) },
        ad: AnchorRow { moca_anchor: raw.ad.moca_anchor, profile: row_to_profile(Condition::Ad, &raw.ad) },
    }
});

/// The parameter table shipped with the crate.
pub fn default_table() -> &'static ProfileTable {
    &TABLE
}

/// Default stage-3 metric-loss weight from the shipped table.
pub fn default_alpha() -> f64 {
    default_table().stage3_alpha
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_parses_and_alpha_is_half() {
        let table = default_table();
        assert_eq!(table.stage3_alpha, 0.5);
    }

    #[test]
    fn anchor_rows_ordered_by_moca() {
        let rows = default_table().rows_by_moca();
        assert!(rows[0].moca_anchor < rows[1].moca_anchor);
        assert!(rows[1].moca_anchor < rows[2].moca_anchor);
    }

    #[test]
    fn documented_default_values() {
        let table = default_table();
        assert_eq!(table.nc.profile.standup_oscillation_count, 0);
        assert_eq!(table.nc.profile.stoop_angle_deg, 5.0);
        assert_eq!(table.ad.moca_anchor, 9);
        assert_eq!(table.ad.profile.standup_oscillation_count, 3);
        assert_eq!(table.ad.profile.stoop_angle_deg, 25.0);
    }

    #[test]
    fn every_row_is_within_bounds() {
        let table = default_table();
        for row in table.rows_by_moca() {
            assert!(row.profile.validate(&table.bounds).is_ok());
        }
    }
}
