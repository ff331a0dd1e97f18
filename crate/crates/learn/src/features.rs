//! Fixed-order feature vectors extracted from clips.

use synact_metrics::{
    angle_series, mean, range_of_motion, speed_series, trunk_pitch_series, FeatureId, FeatureKind,
};
use synact_skeleton::{JointId, KeyJoint, SkeletonClip};

use crate::error::Result;

/// Dimension of the extracted feature vector:
/// 12 mean joint speeds, 12 joint-speed ROMs, 8 mean angles, 8 angle ROMs,
/// mean trunk pitch, and total spine-base displacement.
pub const FEATURE_DIM: usize = 42;

/// Human-readable name of each feature-vector component, index-aligned with
/// [`extract_features`] output.
pub fn feature_names() -> Vec<String> {
    let mut names = Vec::with_capacity(FEATURE_DIM);
    for joint in KeyJoint::metric_joints() {
        names.push(format!("{}_mean_speed", joint.name()));
    }
    for joint in KeyJoint::metric_joints() {
        names.push(format!("{}_speed_rom", joint.name()));
    }
    let angles: Vec<FeatureId> =
        FeatureId::ALL.iter().copied().filter(|f| f.kind() == FeatureKind::Angle).collect();
    for feature in &angles {
        names.push(format!("{}_mean", feature.name()));
    }
    for feature in &angles {
        names.push(format!("{}_rom", feature.name()));
    }
    names.push("trunk_pitch_mean".into());
    names.push("total_displacement".into());
    names
}

/// Extract the fixed-order feature vector from a clip.
///
/// Every component is built from rigid-motion-invariant primitives (speeds,
/// angles, displacement norms), so the vector is invariant under yaw
/// rotations and translations of the clip. Needs at least 2 frames.
pub fn extract_features(clip: &SkeletonClip) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(FEATURE_DIM);
    let mut speed_roms = Vec::with_capacity(KeyJoint::METRIC_COUNT);
    for joint in KeyJoint::metric_joints() {
        let series = speed_series(clip, *joint)?;
        out.push(mean(&series.values));
        speed_roms.push(range_of_motion(&series.values)?);
    }
    out.extend(speed_roms);

    let angles: Vec<FeatureId> =
        FeatureId::ALL.iter().copied().filter(|f| f.kind() == FeatureKind::Angle).collect();
    let mut angle_roms = Vec::with_capacity(angles.len());
    for feature in &angles {
        let series = angle_series(clip, *feature)?;
        out.push(mean(&series.values));
        angle_roms.push(range_of_motion(&series.values)?);
    }
    out.extend(angle_roms);

    out.push(mean(&trunk_pitch_series(clip)?.values));
    let first = clip.frames[0].position(JointId::SpineBase);
    let last = clip.frames[clip.frames.len() - 1].position(JointId::SpineBase);
    out.push((last - first).norm());

    debug_assert_eq!(out.len(), FEATURE_DIM);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use synact_skeleton::{ActionLabel, Condition, Pose, SubjectMetadata, Vec3};

    fn rich_static_pose() -> Pose {
        let mut pose = Pose::origin();
        for joint in JointId::ALL {
            let c = joint.code() as f64;
            pose.set_position(joint, Vec3::new((c * 0.71).sin(), 1.0 + (c * 0.37).cos(), c * 0.1));
        }
        pose
    }

    #[test]
    fn names_match_dimension() {
        assert_eq!(feature_names().len(), FEATURE_DIM);
    }

    #[test]
    fn static_clip_zero_speed_components() {
        let clip = SkeletonClip::new(
            30.0,
            vec![rich_static_pose(); 5],
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::Standing,
            0.0,
        )
        .unwrap();
        let f = extract_features(&clip).unwrap();
        assert_eq!(f.len(), FEATURE_DIM);
        for v in &f[..24] {
            assert_eq!(*v, 0.0); // mean speeds and speed ROMs
        }
        assert_eq!(f[FEATURE_DIM - 1], 0.0); // displacement
    }

    #[test]
    fn yaw_rotation_leaves_features_unchanged() {
        let frames: Vec<Pose> = (0..8)
            .map(|t| {
                let mut pose = rich_static_pose();
                for joint in JointId::ALL {
                    let p = pose.position(joint);
                    pose.set_position(joint, p + Vec3::new(0.02 * t as f64, 0.01 * t as f64, 0.0));
                }
                pose
            })
            .collect();
        let clip = SkeletonClip::new(
            30.0,
            frames,
            SubjectMetadata::new(Condition::Mci, "t"),
            ActionLabel::Walking,
            0.0,
        )
        .unwrap();
        let base = extract_features(&clip).unwrap();
        let rotated = clip.map_positions(|p| p.rotate_y(std::f64::consts::FRAC_PI_2) + Vec3::new(3.0, -1.0, 2.0));
        let moved = extract_features(&rotated).unwrap();
        for (a, b) in base.iter().zip(moved.iter()) {
            assert!((a - b).abs() <= 1e-9, "feature drifted by {}", (a - b).abs());
        }
    }

    #[test]
    fn components_match_metrics_recomputation() {
        let frames: Vec<Pose> = (0..10)
            .map(|t| {
                let mut pose = rich_static_pose();
                for joint in JointId::ALL {
                    let p = pose.position(joint);
                    pose.set_position(
                        joint,
                        p + Vec3::new((t as f64 * 0.3).sin() * 0.05, 0.0, 0.02 * t as f64),
                    );
                }
                pose
            })
            .collect();
        let clip = SkeletonClip::new(
            30.0,
            frames,
            SubjectMetadata::new(Condition::Ad, "t"),
            ActionLabel::Walking,
            0.0,
        )
        .unwrap();
        let f = extract_features(&clip).unwrap();
        let hip_speeds = speed_series(&clip, KeyJoint::HipLeft).unwrap();
        assert_eq!(f[0], mean(&hip_speeds.values));
        assert_eq!(f[12], range_of_motion(&hip_speeds.values).unwrap());
        let hip_angles = angle_series(&clip, FeatureId::LeftHipAngle).unwrap();
        assert_eq!(f[24], mean(&hip_angles.values));
        assert_eq!(f[32], range_of_motion(&hip_angles.values).unwrap());
    }
}
