//! Joint identifiers for the 25-joint capture topology and the key-joint
//! subset used by the motion metrics.

use serde::{Deserialize, Serialize};

/// Number of joints in the capture skeleton.
pub const JOINT_COUNT: usize = 25;

/// One joint of the 25-joint capture skeleton.
///
/// The integer codes 0–24 follow the joint order of the standard capture
/// format, so `JointId::ALL[i]` is the joint whose coordinates appear on the
/// `i`-th joint line of a capture file and at index `i` of a native clip
/// frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[repr(u8)]
pub enum JointId {
    SpineBase = 0,
    SpineMid = 1,
    Neck = 2,
    Head = 3,
    ShoulderLeft = 4,
    ElbowLeft = 5,
    WristLeft = 6,
    HandLeft = 7,
    ShoulderRight = 8,
    ElbowRight = 9,
    WristRight = 10,
    HandRight = 11,
    HipLeft = 12,
    KneeLeft = 13,
    AnkleLeft = 14,
    FootLeft = 15,
    HipRight = 16,
    KneeRight = 17,
    AnkleRight = 18,
    FootRight = 19,
    SpineShoulder = 20,
    HandTipLeft = 21,
    ThumbLeft = 22,
    HandTipRight = 23,
    ThumbRight = 24,
}

impl JointId {
    /// All 25 joints in code order.
    pub const ALL: [JointId; JOINT_COUNT] = [
        JointId::SpineBase,
        JointId::SpineMid,
        JointId::Neck,
        JointId::Head,
        JointId::ShoulderLeft,
        JointId::ElbowLeft,
        JointId::WristLeft,
        JointId::HandLeft,
        JointId::ShoulderRight,
        JointId::ElbowRight,
        JointId::WristRight,
        JointId::HandRight,
        JointId::HipLeft,
        JointId::KneeLeft,
        JointId::AnkleLeft,
        JointId::FootLeft,
        JointId::HipRight,
        JointId::KneeRight,
        JointId::AnkleRight,
        JointId::FootRight,
        JointId::SpineShoulder,
        JointId::HandTipLeft,
        JointId::ThumbLeft,
        JointId::HandTipRight,
        JointId::ThumbRight,
    ];

    /// Stable integer code in `0..25`.
    pub fn code(self) -> usize {
        self as usize
    }

    /// Inverse of [`JointId::code`].
    pub fn from_code(code: usize) -> Option<JointId> {
        JointId::ALL.get(code).copied()
    }

    /// Canonical snake_case name, used for the `joint_names` field of the
    /// native clip document.
    pub fn name(self) -> &'static str {
        match self {
            JointId::SpineBase => "spine_base",
            JointId::SpineMid => "spine_mid",
            JointId::Neck => "neck",
            JointId::Head => "head",
            JointId::ShoulderLeft => "shoulder_left",
            JointId::ElbowLeft => "elbow_left",
            JointId::WristLeft => "wrist_left",
            JointId::HandLeft => "hand_left",
            JointId::ShoulderRight => "shoulder_right",
            JointId::ElbowRight => "elbow_right",
            JointId::WristRight => "wrist_right",
            JointId::HandRight => "hand_right",
            JointId::HipLeft => "hip_left",
            JointId::KneeLeft => "knee_left",
            JointId::AnkleLeft => "ankle_left",
            JointId::FootLeft => "foot_left",
            JointId::HipRight => "hip_right",
            JointId::KneeRight => "knee_right",
            JointId::AnkleRight => "ankle_right",
            JointId::FootRight => "foot_right",
            JointId::SpineShoulder => "spine_shoulder",
            JointId::HandTipLeft => "hand_tip_left",
            JointId::ThumbLeft => "thumb_left",
            JointId::HandTipRight => "hand_tip_right",
            JointId::ThumbRight => "thumb_right",
        }
    }
}

/// The metric-bearing joints, plus the wrists.
///
/// The first [`KeyJoint::METRIC_COUNT`] entries of [`KeyJoint::ALL`] are the
/// 12 joints whose summary statistics enter the metric loss (hips, knees,
/// ankles, elbows, shoulders, neck, back). The wrists follow because wrist
/// speed is part of the comparison report even though wrists do not count
/// toward the metric-loss joint set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KeyJoint {
    HipLeft,
    HipRight,
    KneeLeft,
    KneeRight,
    AnkleLeft,
    AnkleRight,
    ElbowLeft,
    ElbowRight,
    ShoulderLeft,
    ShoulderRight,
    Neck,
    Back,
    WristLeft,
    WristRight,
}

impl KeyJoint {
    /// Fixed output order: 12 metric joints first, then the two wrists.
    pub const ALL: [KeyJoint; 14] = [
        KeyJoint::HipLeft,
        KeyJoint::HipRight,
        KeyJoint::KneeLeft,
        KeyJoint::KneeRight,
        KeyJoint::AnkleLeft,
        KeyJoint::AnkleRight,
        KeyJoint::ElbowLeft,
        KeyJoint::ElbowRight,
        KeyJoint::ShoulderLeft,
        KeyJoint::ShoulderRight,
        KeyJoint::Neck,
        KeyJoint::Back,
        KeyJoint::WristLeft,
        KeyJoint::WristRight,
    ];

    /// Number of joints that count toward the metric loss.
    pub const METRIC_COUNT: usize = 12;

    /// The 12 metric joints, in output order.
    pub fn metric_joints() -> &'static [KeyJoint] {
        &KeyJoint::ALL[..KeyJoint::METRIC_COUNT]
    }

    /// Capture joint this key joint reads from. `Back` maps to the mid-spine
    /// joint and `Neck` to the neck joint; all other mappings are the
    /// same-named capture joint.
    pub fn capture_joint(self) -> JointId {
        match self {
            KeyJoint::HipLeft => JointId::HipLeft,
            KeyJoint::HipRight => JointId::HipRight,
            KeyJoint::KneeLeft => JointId::KneeLeft,
            KeyJoint::KneeRight => JointId::KneeRight,
            KeyJoint::AnkleLeft => JointId::AnkleLeft,
            KeyJoint::AnkleRight => JointId::AnkleRight,
            KeyJoint::ElbowLeft => JointId::ElbowLeft,
            KeyJoint::ElbowRight => JointId::ElbowRight,
            KeyJoint::ShoulderLeft => JointId::ShoulderLeft,
            KeyJoint::ShoulderRight => JointId::ShoulderRight,
            KeyJoint::Neck => JointId::Neck,
            KeyJoint::Back => JointId::SpineMid,
            KeyJoint::WristLeft => JointId::WristLeft,
            KeyJoint::WristRight => JointId::WristRight,
        }
    }

    /// Snake_case name used in feature labels and CSV output.
    pub fn name(self) -> &'static str {
        match self {
            KeyJoint::HipLeft => "left_hip",
            KeyJoint::HipRight => "right_hip",
            KeyJoint::KneeLeft => "left_knee",
            KeyJoint::KneeRight => "right_knee",
            KeyJoint::AnkleLeft => "left_ankle",
            KeyJoint::AnkleRight => "right_ankle",
            KeyJoint::ElbowLeft => "left_elbow",
            KeyJoint::ElbowRight => "right_elbow",
            KeyJoint::ShoulderLeft => "left_shoulder",
            KeyJoint::ShoulderRight => "right_shoulder",
            KeyJoint::Neck => "neck",
            KeyJoint::Back => "back",
            KeyJoint::WristLeft => "left_wrist",
            KeyJoint::WristRight => "right_wrist",
        }
    }
}

/// Bone topology: 24 edges spanning the 25-joint set, as (parent, child)
/// pairs. Used by the depth renderer to draw each bone as a capsule.
pub const BONES: [(JointId, JointId); 24] = [
    (JointId::SpineBase, JointId::SpineMid),
    (JointId::SpineMid, JointId::SpineShoulder),
    (JointId::SpineShoulder, JointId::Neck),
    (JointId::Neck, JointId::Head),
    (JointId::SpineShoulder, JointId::ShoulderLeft),
    (JointId::ShoulderLeft, JointId::ElbowLeft),
    (JointId::ElbowLeft, JointId::WristLeft),
    (JointId::WristLeft, JointId::HandLeft),
    (JointId::HandLeft, JointId::HandTipLeft),
    (JointId::WristLeft, JointId::ThumbLeft),
    (JointId::SpineShoulder, JointId::ShoulderRight),
    (JointId::ShoulderRight, JointId::ElbowRight),
    (JointId::ElbowRight, JointId::WristRight),
    (JointId::WristRight, JointId::HandRight),
    (JointId::HandRight, JointId::HandTipRight),
    (JointId::WristRight, JointId::ThumbRight),
    (JointId::SpineBase, JointId::HipLeft),
    (JointId::HipLeft, JointId::KneeLeft),
    (JointId::KneeLeft, JointId::AnkleLeft),
    (JointId::AnkleLeft, JointId::FootLeft),
    (JointId::SpineBase, JointId::HipRight),
    (JointId::HipRight, JointId::KneeRight),
    (JointId::KneeRight, JointId::AnkleRight),
    (JointId::AnkleRight, JointId::FootRight),
];
