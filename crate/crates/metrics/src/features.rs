//! The 17 report features: 8 joint angles and 9 joint speeds.

use synact_skeleton::{JointId, KeyJoint};

use crate::series::Units;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeatureKind {
    Angle,
    Speed,
}

/// One row of the comparison report. `ALL` lists angles first, then speeds,
/// which is also the fixed row order of the CSV output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeatureId {
    LeftHipAngle,
    RightHipAngle,
    LeftKneeAngle,
    RightKneeAngle,
    LeftShoulderAngle,
    RightShoulderAngle,
    NeckAngle,
    BackAngle,
    NeckSpeed,
    LeftAnkleSpeed,
    RightAnkleSpeed,
    LeftWristSpeed,
    RightWristSpeed,
    LeftKneeSpeed,
    RightKneeSpeed,
    LeftHipSpeed,
    RightHipSpeed,
}

impl FeatureId {
    pub const ALL: [FeatureId; 17] = [
        FeatureId::LeftHipAngle,
        FeatureId::RightHipAngle,
        FeatureId::LeftKneeAngle,
        FeatureId::RightKneeAngle,
        FeatureId::LeftShoulderAngle,
        FeatureId::RightShoulderAngle,
        FeatureId::NeckAngle,
        FeatureId::BackAngle,
        FeatureId::NeckSpeed,
        FeatureId::LeftAnkleSpeed,
        FeatureId::RightAnkleSpeed,
        FeatureId::LeftWristSpeed,
        FeatureId::RightWristSpeed,
        FeatureId::LeftKneeSpeed,
        FeatureId::RightKneeSpeed,
        FeatureId::LeftHipSpeed,
        FeatureId::RightHipSpeed,
    ];

    pub fn kind(self) -> FeatureKind {
        match self {
            FeatureId::LeftHipAngle
            | FeatureId::RightHipAngle
            | FeatureId::LeftKneeAngle
            | FeatureId::RightKneeAngle
            | FeatureId::LeftShoulderAngle
            | FeatureId::RightShoulderAngle
            | FeatureId::NeckAngle
            | FeatureId::BackAngle => FeatureKind::Angle,
            _ => FeatureKind::Speed,
        }
    }

    pub fn units(self) -> Units {
        match self.kind() {
            FeatureKind::Angle => Units::Degrees,
            FeatureKind::Speed => Units::MetersPerSecond,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FeatureId::LeftHipAngle => "left_hip_angle",
            FeatureId::RightHipAngle => "right_hip_angle",
            FeatureId::LeftKneeAngle => "left_knee_angle",
            FeatureId::RightKneeAngle => "right_knee_angle",
            FeatureId::LeftShoulderAngle => "left_shoulder_angle",
            FeatureId::RightShoulderAngle => "right_shoulder_angle",
            FeatureId::NeckAngle => "neck_angle",
            FeatureId::BackAngle => "back_angle",
            FeatureId::NeckSpeed => "neck_speed",
            FeatureId::LeftAnkleSpeed => "left_ankle_speed",
            FeatureId::RightAnkleSpeed => "right_ankle_speed",
            FeatureId::LeftWristSpeed => "left_wrist_speed",
            FeatureId::RightWristSpeed => "right_wrist_speed",
            FeatureId::LeftKneeSpeed => "left_knee_speed",
            FeatureId::RightKneeSpeed => "right_knee_speed",
            FeatureId::LeftHipSpeed => "left_hip_speed",
            FeatureId::RightHipSpeed => "right_hip_speed",
        }
    }

    pub fn parse(s: &str) -> Option<FeatureId> {
        FeatureId::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// Angle convention table. Each angle sits at a vertex joint between two
    /// endpoint joints, following standard clinical gait conventions:
    /// hip = shoulder–hip–knee, knee = hip–knee–ankle,
    /// shoulder = neck–shoulder–elbow, neck = head–neck–mid-spine,
    /// back = neck–mid-spine–spine-base. Returns `(endpoint_a, vertex,
    /// endpoint_c)`, or `None` for speed features.
    pub fn angle_joints(self) -> Option<(JointId, JointId, JointId)> {
        use JointId::*;
        match self {
            FeatureId::LeftHipAngle => Some((ShoulderLeft, HipLeft, KneeLeft)),
            FeatureId::RightHipAngle => Some((ShoulderRight, HipRight, KneeRight)),
            FeatureId::LeftKneeAngle => Some((HipLeft, KneeLeft, AnkleLeft)),
            FeatureId::RightKneeAngle => Some((HipRight, KneeRight, AnkleRight)),
            FeatureId::LeftShoulderAngle => Some((Neck, ShoulderLeft, ElbowLeft)),
            FeatureId::RightShoulderAngle => Some((Neck, ShoulderRight, ElbowRight)),
            FeatureId::NeckAngle => Some((Head, Neck, SpineMid)),
            FeatureId::BackAngle => Some((Neck, SpineMid, SpineBase)),
            _ => None,
        }
    }

    /// The key joint a speed feature tracks, `None` for angle features.
    pub fn speed_joint(self) -> Option<KeyJoint> {
        match self {
            FeatureId::NeckSpeed => Some(KeyJoint::Neck),
            FeatureId::LeftAnkleSpeed => Some(KeyJoint::AnkleLeft),
            FeatureId::RightAnkleSpeed => Some(KeyJoint::AnkleRight),
            FeatureId::LeftWristSpeed => Some(KeyJoint::WristLeft),
            FeatureId::RightWristSpeed => Some(KeyJoint::WristRight),
            FeatureId::LeftKneeSpeed => Some(KeyJoint::KneeLeft),
            FeatureId::RightKneeSpeed => Some(KeyJoint::KneeRight),
            FeatureId::LeftHipSpeed => Some(KeyJoint::HipLeft),
            FeatureId::RightHipSpeed => Some(KeyJoint::HipRight),
            _ => None,
        }
    }
}

impl std::fmt::Display for FeatureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Angle feature whose summary statistics belong to a metric joint, `None`
/// for the joints (ankles, elbows, wrists) that carry no angle feature.
pub fn angle_feature_for(joint: KeyJoint) -> Option<FeatureId> {
    match joint {
        KeyJoint::HipLeft => Some(FeatureId::LeftHipAngle),
        KeyJoint::HipRight => Some(FeatureId::RightHipAngle),
        KeyJoint::KneeLeft => Some(FeatureId::LeftKneeAngle),
        KeyJoint::KneeRight => Some(FeatureId::RightKneeAngle),
        KeyJoint::ShoulderLeft => Some(FeatureId::LeftShoulderAngle),
        KeyJoint::ShoulderRight => Some(FeatureId::RightShoulderAngle),
        KeyJoint::Neck => Some(FeatureId::NeckAngle),
        KeyJoint::Back => Some(FeatureId::BackAngle),
        _ => None,
    }
}
