//! Joint speed series and velocity helpers.

use synact_skeleton::{JointId, KeyJoint, SkeletonClip};

use crate::error::{MetricsError, Result};
use crate::series::{FeatureSeries, Units};

/// Per-step speed of one key joint: `‖p[t+1] − p[t]‖ · fps` in m/s.
/// Length is `frames − 1`, so the clip needs at least 2 frames.
pub fn speed_series(clip: &SkeletonClip, joint: KeyJoint) -> Result<FeatureSeries> {
    let series = joint_speed_series(clip, joint.capture_joint())?;
    Ok(FeatureSeries { name: format!("{}_speed", joint.name()), ..series })
}

/// Speed series for an arbitrary capture joint.
pub fn joint_speed_series(clip: &SkeletonClip, joint: JointId) -> Result<FeatureSeries> {
    if clip.frames.len() < 2 {
        return Err(MetricsError::InsufficientFrames { needed: 2, got: clip.frames.len() });
    }
    let values = clip
        .frames
        .windows(2)
        .map(|w| (w[1].position(joint) - w[0].position(joint)).norm() * clip.fps)
        .collect();
    Ok(FeatureSeries {
        name: format!("joint{}_speed", joint.code()),
        values,
        units: Units::MetersPerSecond,
    })
}

/// Signed vertical velocity of one joint: `(y[t+1] − y[t]) · fps` in m/s.
pub fn vertical_velocity_series(clip: &SkeletonClip, joint: JointId) -> Result<Vec<f64>> {
    if clip.frames.len() < 2 {
        return Err(MetricsError::InsufficientFrames { needed: 2, got: clip.frames.len() });
    }
    Ok(clip
        .frames
        .windows(2)
        .map(|w| (w[1].position(joint).y - w[0].position(joint).y) * clip.fps)
        .collect())
}

/// Count sign reversals of a signed series, ignoring samples whose magnitude
/// is at or below `floor`. Consecutive significant samples with opposite
/// signs count as one reversal; the floor keeps numeric dither around zero
/// from registering as motion.
pub fn velocity_sign_reversals(values: &[f64], floor: f64) -> usize {
    let mut reversals = 0;
    let mut last_sign = 0i8;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        let sign = if v > 0.0 { 1 } else { -1 };
        if last_sign != 0 && sign != last_sign {
            reversals += 1;
        }
        last_sign = sign;
    }
    reversals
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use synact_skeleton::{ActionLabel, Condition, Pose, SubjectMetadata, Vec3};

    fn clip_from_x(xs: &[f64], fps: f64) -> SkeletonClip {
        let frames = xs
            .iter()
            .map(|&x| {
                let mut pose = Pose::origin();
                pose.set_position(JointId::Neck, Vec3::new(x, 0.0, 0.0));
                pose
            })
            .collect();
        SkeletonClip::new(
            fps,
            frames,
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::Walking,
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn stationary_joint_all_zero() {
        let clip = clip_from_x(&[0.5, 0.5, 0.5, 0.5], 30.0);
        let series = speed_series(&clip, KeyJoint::Neck).unwrap();
        assert_eq!(series.values, vec![0.0, 0.0, 0.0]);
        assert_eq!(series.values.len(), clip.frame_count() - 1);
    }

    #[test]
    fn constant_advance_gives_constant_speed() {
        let clip = clip_from_x(&[0.0, 0.1, 0.2, 0.3], 30.0);
        let series = speed_series(&clip, KeyJoint::Neck).unwrap();
        for v in &series.values {
            assert_abs_diff_eq!(*v, 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn random_walk_matches_finite_difference_oracle() {
        let xs: Vec<f64> = (0..40).map(|i| ((i * 37 + 11) % 17) as f64 * 0.013).collect();
        let fps = 25.0;
        let clip = clip_from_x(&xs, fps);
        let series = speed_series(&clip, KeyJoint::Neck).unwrap();
        for (t, v) in series.values.iter().enumerate() {
            let oracle = (xs[t + 1] - xs[t]).abs() * fps;
            assert_abs_diff_eq!(*v, oracle, epsilon = 1e-12);
        }
    }

    #[test]
    fn single_frame_clip_is_insufficient() {
        let clip = clip_from_x(&[1.0], 30.0);
        assert!(matches!(
            speed_series(&clip, KeyJoint::Neck),
            Err(MetricsError::InsufficientFrames { .. })
        ));
    }

    #[test]
    fn sign_reversal_counting() {
        assert_eq!(velocity_sign_reversals(&[1.0, 1.0, 1.0], 0.0), 0);
        assert_eq!(velocity_sign_reversals(&[1.0, -1.0, 1.0], 0.0), 2);
        // Dither below the floor does not count.
        assert_eq!(velocity_sign_reversals(&[1.0, -0.001, 1.0], 0.01), 0);
        assert_eq!(velocity_sign_reversals(&[0.5, -0.2, 0.4, -0.3], 0.05), 3);
        assert_eq!(velocity_sign_reversals(&[], 0.0), 0);
    }

    #[test]
    fn vertical_velocity_signed() {
        let mut frames = Vec::new();
        for y in [0.0, 0.1, 0.05] {
            let mut pose = Pose::origin();
            pose.set_position(JointId::Neck, Vec3::new(0.0, y, 0.0));
            frames.push(pose);
        }
        let clip = SkeletonClip::new(
            10.0,
            frames,
            SubjectMetadata::new(Condition::Nc, "t"),
            ActionLabel::SitToStand,
            0.0,
        )
        .unwrap();
        let v = vertical_velocity_series(&clip, JointId::Neck).unwrap();
        assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[1], -0.5, epsilon = 1e-12);
    }
}
