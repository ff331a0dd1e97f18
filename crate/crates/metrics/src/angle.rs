//! Joint angles and angle series.

use synact_skeleton::{JointId, SkeletonClip, Vec3};

use crate::error::{MetricsError, Result};
use crate::features::{FeatureId, FeatureKind};
use crate::series::{FeatureSeries, Units};

/// Segments shorter than this are degenerate geometry.
pub const GEOMETRY_EPS_M: f64 = 1e-9;

/// Angle at vertex `b` between segments `b→a` and `b→c`, in degrees within
/// `[0, 180]`.
///
/// Computed as `atan2(‖u × v‖, u · v)`, which stays well-conditioned for
/// collinear segments where an acos formulation loses eight digits.
pub fn joint_angle(a: Vec3, b: Vec3, c: Vec3) -> Result<f64> {
    let u = a - b;
    let v = c - b;
    let nu = u.norm();
    let nv = v.norm();
    if nu <= GEOMETRY_EPS_M || nv <= GEOMETRY_EPS_M {
        return Err(MetricsError::DegenerateGeometry {
            frame: None,
            what: format!("segment length {:.3e} below epsilon", nu.min(nv)),
        });
    }
    Ok(u.cross(v).norm().atan2(u.dot(v)).to_degrees())
}

/// Per-frame angle series for one of the 8 angle features. Same fps and
/// frame count as the clip.
pub fn angle_series(clip: &SkeletonClip, feature: FeatureId) -> Result<FeatureSeries> {
    if feature.kind() != FeatureKind::Angle {
        return Err(MetricsError::NotAnAngleFeature(feature.name().into()));
    }
    let (ja, jb, jc) = feature.angle_joints().expect("angle feature has joints");
    let mut values = Vec::with_capacity(clip.frames.len());
    for (i, frame) in clip.frames.iter().enumerate() {
        let angle = joint_angle(frame.position(ja), frame.position(jb), frame.position(jc))
            .map_err(|e| match e {
                MetricsError::DegenerateGeometry { what, .. } => {
                    MetricsError::DegenerateGeometry { frame: Some(i), what }
                }
                other => other,
            })?;
        values.push(angle);
    }
    Ok(FeatureSeries { name: feature.name().into(), values, units: Units::Degrees })
}

/// Forward trunk pitch per frame: the angle in degrees between the
/// spine-base→neck axis and vertical. 0 = upright, 90 = horizontal.
pub fn trunk_pitch_series(clip: &SkeletonClip) -> Result<FeatureSeries> {
    let mut values = Vec::with_capacity(clip.frames.len());
    for (i, frame) in clip.frames.iter().enumerate() {
        let spine = frame.position(JointId::Neck) - frame.position(JointId::SpineBase);
        if spine.norm() <= GEOMETRY_EPS_M {
            return Err(MetricsError::DegenerateGeometry {
                frame: Some(i),
                what: "zero-length trunk axis".into(),
            });
        }
        let up = Vec3::new(0.0, 1.0, 0.0);
        values.push(spine.cross(up).norm().atan2(spine.dot(up)).to_degrees());
    }
    Ok(FeatureSeries { name: "trunk_pitch".into(), values, units: Units::Degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use synact_skeleton::{ActionLabel, Condition, Pose, SubjectMetadata};

    #[test]
    fn orthogonal_is_ninety() {
        let angle =
            joint_angle(Vec3::new(0.0, 1.0, 0.0), Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(angle, 90.0, epsilon = 1e-12);
    }

    #[test]
    fn collinear_is_one_eighty() {
        let angle = joint_angle(
            Vec3::new(0.0, 2.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 0.0),
        )
        .unwrap();
        assert_abs_diff_eq!(angle, 180.0, epsilon = 1e-12);
    }

    #[test]
    fn diagonal_is_forty_five() {
        let angle =
            joint_angle(Vec3::new(1.0, 0.0, 0.0), Vec3::ZERO, Vec3::new(1.0, 1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(angle, 45.0, epsilon = 1e-12);
    }

    #[test]
    fn degenerate_segment_is_an_error() {
        let err = joint_angle(Vec3::ZERO, Vec3::ZERO, Vec3::new(1.0, 0.0, 0.0));
        assert!(matches!(err, Err(MetricsError::DegenerateGeometry { .. })));
    }

    fn upright_pose() -> Pose {
        let mut pose = Pose::origin();
        pose.set_position(JointId::SpineBase, Vec3::new(0.0, 1.0, 0.0));
        pose.set_position(JointId::SpineMid, Vec3::new(0.0, 1.25, 0.0));
        pose.set_position(JointId::Neck, Vec3::new(0.0, 1.5, 0.0));
        pose.set_position(JointId::Head, Vec3::new(0.0, 1.7, 0.0));
        pose.set_position(JointId::HipLeft, Vec3::new(-0.1, 1.0, 0.0));
        pose.set_position(JointId::KneeLeft, Vec3::new(-0.1, 0.5, 0.0));
        pose.set_position(JointId::AnkleLeft, Vec3::new(-0.1, 0.05, 0.0));
        pose
    }

    #[test]
    fn straight_leg_knee_angle_is_one_eighty() {
        let clip = SkeletonClip::new(
            30.0,
            vec![upright_pose(); 4],
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::Standing,
            0.0,
        )
        .unwrap();
        let series = angle_series(&clip, FeatureId::LeftKneeAngle).unwrap();
        assert_eq!(series.values.len(), 4);
        for v in &series.values {
            assert_abs_diff_eq!(*v, 180.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn constant_clip_gives_constant_series() {
        let clip = SkeletonClip::new(
            30.0,
            vec![upright_pose(); 6],
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::Standing,
            0.0,
        )
        .unwrap();
        let series = angle_series(&clip, FeatureId::LeftHipAngle).unwrap();
        for v in &series.values {
            assert_eq!(*v, series.values[0]);
        }
    }

    #[test]
    fn degenerate_frame_error_names_frame_index() {
        let mut frames = vec![upright_pose(); 3];
        let hip = frames[2].position(JointId::HipLeft);
        frames[2].set_position(JointId::KneeLeft, hip);
        let clip = SkeletonClip::new(
            30.0,
            frames,
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::Standing,
            0.0,
        )
        .unwrap();
        match angle_series(&clip, FeatureId::LeftKneeAngle) {
            Err(MetricsError::DegenerateGeometry { frame: Some(2), .. }) => {}
            other => panic!("expected frame-2 degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn trunk_pitch_upright_and_tilted() {
        let mut tilted = upright_pose();
        // Lean the neck forward 45 degrees around the spine base.
        tilted.set_position(JointId::Neck, Vec3::new(0.0, 1.0 + 0.5 / 2f64.sqrt(), 0.5 / 2f64.sqrt()));
        let clip = SkeletonClip::new(
            30.0,
            vec![upright_pose(), tilted],
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::Standing,
            0.0,
        )
        .unwrap();
        let series = trunk_pitch_series(&clip).unwrap();
        assert_abs_diff_eq!(series.values[0], 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(series.values[1], 45.0, epsilon = 1e-9);
    }
}
