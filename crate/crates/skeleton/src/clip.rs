//! Skeleton clips: timed pose sequences with subject and action metadata.

use serde::{Deserialize, Serialize};

use crate::error::SkeletonError;
use crate::joints::KeyJoint;
use crate::pose::{Pose, Vec3};
use crate::Result;

/// Cognitive-condition label attached to a subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    #[serde(rename = "AD")]
    Ad,
    #[serde(rename = "MCI")]
    Mci,
    #[serde(rename = "NC")]
    Nc,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::Ad, Condition::Mci, Condition::Nc];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Ad => "AD",
            Condition::Mci => "MCI",
            Condition::Nc => "NC",
        }
    }

    pub fn parse(s: &str) -> Option<Condition> {
        match s.to_ascii_uppercase().as_str() {
            "AD" => Some(Condition::Ad),
            "MCI" => Some(Condition::Mci),
            "NC" => Some(Condition::Nc),
            _ => None,
        }
    }
}

/// Closed set of supported actions. Unknown labels are rejected when clip
/// documents are parsed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionLabel {
    Sitting,
    Standing,
    Walking,
    Turning,
    Lying,
    SitToStand,
    StandToSit,
}

impl ActionLabel {
    pub const ALL: [ActionLabel; 7] = [
        ActionLabel::Sitting,
        ActionLabel::Standing,
        ActionLabel::Walking,
        ActionLabel::Turning,
        ActionLabel::Lying,
        ActionLabel::SitToStand,
        ActionLabel::StandToSit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ActionLabel::Sitting => "sitting",
            ActionLabel::Standing => "standing",
            ActionLabel::Walking => "walking",
            ActionLabel::Turning => "turning",
            ActionLabel::Lying => "lying",
            ActionLabel::SitToStand => "sit_to_stand",
            ActionLabel::StandToSit => "stand_to_sit",
        }
    }

    pub fn parse(s: &str) -> Option<ActionLabel> {
        ActionLabel::ALL.iter().copied().find(|a| a.name() == s)
    }

    /// Index into [`ActionLabel::ALL`]; used as the class id by classifiers.
    pub fn class_index(self) -> usize {
        ActionLabel::ALL.iter().position(|a| *a == self).unwrap()
    }
}

impl std::fmt::Display for ActionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Who performed a clip. MoCA is the 0–30 cognitive screen (lower = more
/// impaired); ZBI is the 0–88 caregiver-burden score. Both are optional
/// annotations carried through from the source data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubjectMetadata {
    pub condition: Condition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moca_score: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zbi_score: Option<u8>,
    pub subject_id: String,
}

impl SubjectMetadata {
    pub fn new(condition: Condition, subject_id: impl Into<String>) -> SubjectMetadata {
        SubjectMetadata {
            condition,
            moca_score: None,
            zbi_score: None,
            subject_id: subject_id.into(),
        }
    }

    pub fn with_moca(mut self, moca: u8) -> SubjectMetadata {
        self.moca_score = Some(moca);
        self
    }

    fn validate(&self) -> Result<()> {
        if let Some(moca) = self.moca_score {
            if moca > 30 {
                return Err(SkeletonError::Validation(format!(
                    "moca_score {moca} outside [0, 30]"
                )));
            }
        }
        if let Some(zbi) = self.zbi_score {
            if zbi > 88 {
                return Err(SkeletonError::Validation(format!(
                    "zbi_score {zbi} outside [0, 88]"
                )));
            }
        }
        Ok(())
    }
}

/// A timed sequence of skeleton poses for one subject performing one action.
///
/// `viewpoint_deg` records the yaw angle of the camera around the subject,
/// in `[0, 360)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkeletonClip {
    pub fps: f64,
    pub frames: Vec<Pose>,
    pub metadata: SubjectMetadata,
    pub action: ActionLabel,
    pub viewpoint_deg: f64,
}

impl SkeletonClip {
    /// Build a clip and check every invariant.
    pub fn new(
        fps: f64,
        frames: Vec<Pose>,
        metadata: SubjectMetadata,
        action: ActionLabel,
        viewpoint_deg: f64,
    ) -> Result<SkeletonClip> {
        let clip = SkeletonClip { fps, frames, metadata, action, viewpoint_deg };
        clip.validate()?;
        Ok(clip)
    }

    /// Check all invariants: non-empty frames, positive finite fps, finite
    /// coordinates, score ranges, viewpoint in `[0, 360)`.
    pub fn validate(&self) -> Result<()> {
        if self.frames.is_empty() {
            return Err(SkeletonError::Validation("clip has no frames".into()));
        }
        if !(self.fps.is_finite() && self.fps > 0.0) {
            return Err(SkeletonError::Validation(format!("fps {} not positive", self.fps)));
        }
        if !(0.0..360.0).contains(&self.viewpoint_deg) {
            return Err(SkeletonError::Validation(format!(
                "viewpoint_deg {} outside [0, 360)",
                self.viewpoint_deg
            )));
        }
        self.metadata.validate()?;
        for (i, frame) in self.frames.iter().enumerate() {
            if !frame.all_finite() {
                return Err(SkeletonError::Validation(format!(
                    "non-finite coordinate in frame {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }

    pub fn duration_s(&self) -> f64 {
        self.frames.len() as f64 / self.fps
    }

    /// Per-frame positions of one key joint.
    pub fn key_joint_track(&self, key: KeyJoint) -> Vec<Vec3> {
        let joint = key.capture_joint();
        self.frames.iter().map(|f| f.position(joint)).collect()
    }

    /// Per-frame positions for the 12 key joints plus the wrists, in the
    /// fixed order of [`KeyJoint::ALL`]. Total on valid clips.
    pub fn key_joint_positions(&self) -> Vec<Vec<Vec3>> {
        KeyJoint::ALL.iter().map(|k| self.key_joint_track(*k)).collect()
    }

    /// Apply a rigid (or otherwise) point transform to every joint of every
    /// frame, keeping timing and metadata.
    pub fn map_positions(&self, mut f: impl FnMut(Vec3) -> Vec3) -> SkeletonClip {
        SkeletonClip {
            fps: self.fps,
            frames: self.frames.iter().map(|p| p.map(&mut f)).collect(),
            metadata: self.metadata.clone(),
            action: self.action,
            viewpoint_deg: self.viewpoint_deg,
        }
    }
}
