//! Per-joint motion summary vectors.

use synact_skeleton::{KeyJoint, SkeletonClip};

use crate::angle::angle_series;
use crate::error::Result;
use crate::features::angle_feature_for;
use crate::series::range_of_motion;
use crate::speed::speed_series;

/// Summary of one joint's angle series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleSummary {
    pub mean_deg: f64,
    pub rom_deg: f64,
}

/// Motion summary vector M(i) for one key joint: mean speed always, plus
/// mean angle and angle ROM for the eight angle-bearing joints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointMetrics {
    pub joint: KeyJoint,
    pub mean_speed_mps: f64,
    pub angle: Option<AngleSummary>,
}

impl JointMetrics {
    /// Components as a flat vector (length 1 or 3).
    pub fn components(&self) -> Vec<f64> {
        match self.angle {
            Some(a) => vec![self.mean_speed_mps, a.mean_deg, a.rom_deg],
            None => vec![self.mean_speed_mps],
        }
    }
}

/// Motion metrics over the 12 key joints, in the fixed order of
/// [`KeyJoint::metric_joints`].
#[derive(Debug, Clone, PartialEq)]
pub struct MetricProfile {
    joints: Vec<JointMetrics>,
}

impl MetricProfile {
    pub fn from_joints(joints: Vec<JointMetrics>) -> MetricProfile {
        MetricProfile { joints }
    }

    pub fn joints(&self) -> &[JointMetrics] {
        &self.joints
    }

    /// N: the number of key joints covered.
    pub fn joint_count(&self) -> usize {
        self.joints.len()
    }

    /// True when `other` covers the same joints with the same component
    /// layout, so the two profiles can be subtracted term by term.
    pub fn layout_matches(&self, other: &MetricProfile) -> bool {
        self.joints.len() == other.joints.len()
            && self.joints.iter().zip(other.joints.iter()).all(|(a, b)| {
                a.joint == b.joint && a.angle.is_some() == b.angle.is_some()
            })
    }

    pub fn all_finite(&self) -> bool {
        self.joints
            .iter()
            .flat_map(|j| j.components())
            .all(|v| v.is_finite())
    }
}

/// Compute the metric profile of a clip: per key joint, mean speed plus the
/// angle summary where the joint carries an angle feature. Deterministic;
/// needs at least 2 frames (for the speed series).
pub fn metric_profile(clip: &SkeletonClip) -> Result<MetricProfile> {
    let mut joints = Vec::with_capacity(KeyJoint::METRIC_COUNT);
    for &joint in KeyJoint::metric_joints() {
        let speeds = speed_series(clip, joint)?;
        let angle = match angle_feature_for(joint) {
            Some(feature) => {
                let series = angle_series(clip, feature)?;
                Some(AngleSummary {
                    mean_deg: series.mean(),
                    rom_deg: range_of_motion(&series.values)?,
                })
            }
            None => None,
        };
        joints.push(JointMetrics { joint, mean_speed_mps: speeds.mean(), angle });
    }
    Ok(MetricProfile { joints })
}
