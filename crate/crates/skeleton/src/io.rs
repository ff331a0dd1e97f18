//! Native clip file format.
//!
//! One UTF-8 JSON document per clip with fields `fps`, `joint_names`
//! (ordered, must match the canonical 25-joint list), `frames` (one array of
//! 25 `[x, y, z]` triples per frame), `metadata`, `action` and
//! `viewpoint_deg`. Floats are written in shortest-round-trip decimal form,
//! so saving and re-loading reproduces every coordinate exactly.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::clip::{ActionLabel, SkeletonClip, SubjectMetadata};
use crate::error::SkeletonError;
use crate::joints::{JointId, JOINT_COUNT};
use crate::pose::{Pose, Vec3};
use crate::Result;

#[derive(Serialize, Deserialize)]
struct ClipDocument {
    fps: f64,
    joint_names: Vec<String>,
    frames: Vec<Vec<[f64; 3]>>,
    metadata: SubjectMetadata,
    action: ActionLabel,
    viewpoint_deg: f64,
}

/// Serialize a clip to the native document text.
pub fn clip_to_string(clip: &SkeletonClip) -> Result<String> {
    clip.validate()?;
    let doc = ClipDocument {
        fps: clip.fps,
        joint_names: JointId::ALL.iter().map(|j| j.name().to_string()).collect(),
        frames: clip
            .frames
            .iter()
            .map(|pose| pose.positions().iter().map(|p| [p.x, p.y, p.z]).collect())
            .collect(),
        metadata: clip.metadata.clone(),
        action: clip.action,
        viewpoint_deg: clip.viewpoint_deg,
    };
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    Ok(text)
}

/// Parse the native document text into a validated clip.
pub fn clip_from_str(text: &str) -> Result<SkeletonClip> {
    let doc: ClipDocument = serde_json::from_str(text)?;
    if doc.joint_names.len() != JOINT_COUNT {
        return Err(SkeletonError::Document(format!(
            "joint_names has {} entries, expected {JOINT_COUNT}",
            doc.joint_names.len()
        )));
    }
    for (i, name) in doc.joint_names.iter().enumerate() {
        let expected = JointId::ALL[i].name();
        if name != expected {
            return Err(SkeletonError::Document(format!(
                "joint_names[{i}] is {name:?}, expected {expected:?}"
            )));
        }
    }
    let mut frames = Vec::with_capacity(doc.frames.len());
    for (i, frame) in doc.frames.iter().enumerate() {
        if frame.len() != JOINT_COUNT {
            return Err(SkeletonError::Document(format!(
                "frame {i} has {} joints, expected {JOINT_COUNT}",
                frame.len()
            )));
        }
        let mut positions = [Vec3::ZERO; JOINT_COUNT];
        for (j, p) in frame.iter().enumerate() {
            positions[j] = Vec3::new(p[0], p[1], p[2]);
        }
        frames.push(Pose::from_positions(positions));
    }
    SkeletonClip::new(doc.fps, frames, doc.metadata, doc.action, doc.viewpoint_deg)
}

/// Write a clip to `path` in the native format.
pub fn save_clip(clip: &SkeletonClip, path: impl AsRef<Path>) -> Result<()> {
    let text = clip_to_string(clip)?;
    fs::write(path, text)?;
    Ok(())
}

/// Load and validate a clip from a native-format file.
pub fn load_clip(path: impl AsRef<Path>) -> Result<SkeletonClip> {
    let text = fs::read_to_string(path)?;
    clip_from_str(&text)
}

/// Load every `*.json` clip in a directory, sorted by file name.
/// `manifest.json` files (written next to generated clips) are skipped.
pub fn load_clip_dir(dir: impl AsRef<Path>) -> Result<Vec<SkeletonClip>> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension().is_some_and(|e| e == "json")
                && p.file_name().is_none_or(|n| n != "manifest.json")
        })
        .collect();
    paths.sort();
    paths.iter().map(load_clip).collect()
}
