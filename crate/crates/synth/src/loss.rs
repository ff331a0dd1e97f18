//! Training losses: the per-joint metric discrepancy and the stage-3
//! combination.

use synact_metrics::MetricProfile;
use synact_skeleton::SkeletonClip;

use crate::error::{Result, SynthError};

/// Metric discrepancy between two motion profiles: the mean over key joints
/// of the squared Euclidean distance between their summary vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricLoss {
    pub value: f64,
    pub per_joint_terms: Vec<f64>,
}

/// Compute the metric loss between two profiles covering the same N joints
/// with the same component layout.
pub fn metric_loss(real: &MetricProfile, synthetic: &MetricProfile) -> Result<MetricLoss> {
    if !real.layout_matches(synthetic) {
        return Err(SynthError::LayoutMismatch(format!(
            "{} vs {} joints",
            real.joint_count(),
            synthetic.joint_count()
        )));
    }
    let per_joint_terms: Vec<f64> = real
        .joints()
        .iter()
        .zip(synthetic.joints().iter())
        .map(|(a, b)| {
            a.components()
                .iter()
                .zip(b.components().iter())
                .map(|(x, y)| (x - y) * (x - y))
                .sum()
        })
        .collect();
    let value = per_joint_terms.iter().sum::<f64>() / per_joint_terms.len() as f64;
    Ok(MetricLoss { value, per_joint_terms })
}

/// Stage-3 objective: generation loss plus `alpha` times the metric loss.
pub fn stage3_loss(gen_loss: f64, metric: &MetricLoss, alpha: f64) -> Result<f64> {
    if !(gen_loss.is_finite() && gen_loss >= 0.0) {
        return Err(SynthError::NegativeLoss(format!("gen_loss = {gen_loss}")));
    }
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(SynthError::NegativeLoss(format!("alpha = {alpha}")));
    }
    Ok(gen_loss + alpha * metric.value)
}

/// Desk-scale generation loss: mean squared joint-position error against a
/// reference clip with the same frame count.
pub fn reconstruction_loss(reference: &SkeletonClip, candidate: &SkeletonClip) -> Result<f64> {
    if reference.frame_count() != candidate.frame_count() {
        return Err(SynthError::InvalidRequest(format!(
            "frame count mismatch: {} vs {}",
            reference.frame_count(),
            candidate.frame_count()
        )));
    }
    let mut total = 0.0;
    let mut count = 0usize;
    for (a, b) in reference.frames.iter().zip(candidate.frames.iter()) {
        for (pa, pb) in a.positions().iter().zip(b.positions().iter()) {
            let d = *pa - *pb;
            total += d.dot(d);
            count += 1;
        }
    }
    Ok(total / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_clip, GenerationRequest};
    use crate::profile::default_profile;
    use synact_metrics::{metric_profile, AngleSummary, JointMetrics};
    use synact_skeleton::{ActionLabel, Condition, KeyJoint};

    fn toy_profile(values: &[f64]) -> MetricProfile {
        let joints = values
            .iter()
            .enumerate()
            .map(|(i, v)| JointMetrics {
                joint: KeyJoint::ALL[i],
                mean_speed_mps: *v,
                angle: None,
            })
            .collect();
        MetricProfile::from_joints(joints)
    }

    #[test]
    fn identical_profiles_zero_loss() {
        let p = toy_profile(&[0.5, 1.5]);
        let loss = metric_loss(&p, &p).unwrap();
        assert_eq!(loss.value, 0.0);
        assert_eq!(loss.per_joint_terms, vec![0.0, 0.0]);
    }

    #[test]
    fn two_joint_arithmetic_example() {
        // Per-joint squared distances 1 and 4 average to 2.5.
        let a = toy_profile(&[0.0, 0.0]);
        let b = toy_profile(&[1.0, 2.0]);
        let loss = metric_loss(&a, &b).unwrap();
        assert_eq!(loss.per_joint_terms, vec![1.0, 4.0]);
        assert_eq!(loss.value, 2.5);
    }

    #[test]
    fn loss_is_symmetric_nonnegative_and_matches_direct_formula() {
        let clip_a = generate_clip(&GenerationRequest::new(
            ActionLabel::Walking,
            default_profile(Condition::Ad, None).unwrap(),
            1,
        ))
        .unwrap();
        let clip_b = generate_clip(&GenerationRequest::new(
            ActionLabel::Walking,
            default_profile(Condition::Nc, None).unwrap(),
            2,
        ))
        .unwrap();
        let pa = metric_profile(&clip_a).unwrap();
        let pb = metric_profile(&clip_b).unwrap();
        let ab = metric_loss(&pa, &pb).unwrap();
        let ba = metric_loss(&pb, &pa).unwrap();
        assert_eq!(ab.value, ba.value);
        assert!(ab.value > 0.0);

        // Direct recomputation of the formula.
        let mut expected = 0.0;
        for (ja, jb) in pa.joints().iter().zip(pb.joints().iter()) {
            let ca = ja.components();
            let cb = jb.components();
            expected += ca.iter().zip(cb.iter()).map(|(x, y)| (x - y) * (x - y)).sum::<f64>();
        }
        expected /= pa.joint_count() as f64;
        assert!((ab.value - expected).abs() < 1e-12);
    }

    #[test]
    fn angle_layout_mismatch_rejected() {
        let with_angle = MetricProfile::from_joints(vec![JointMetrics {
            joint: KeyJoint::HipLeft,
            mean_speed_mps: 1.0,
            angle: Some(AngleSummary { mean_deg: 90.0, rom_deg: 10.0 }),
        }]);
        let without = toy_profile(&[1.0]);
        assert!(matches!(
            metric_loss(&with_angle, &without),
            Err(SynthError::LayoutMismatch(_))
        ));
    }

    #[test]
    fn stage3_arithmetic_and_degenerate_weight() {
        let metric = MetricLoss { value: 0.2, per_joint_terms: vec![0.2] };
        assert_eq!(stage3_loss(0.4, &metric, 0.5).unwrap(), 0.5);
        assert_eq!(stage3_loss(0.7, &metric, 0.0).unwrap(), 0.7);
        assert!(stage3_loss(-0.1, &metric, 0.5).is_err());
        assert!(stage3_loss(0.1, &metric, -0.5).is_err());
    }

    #[test]
    fn default_alpha_from_config_is_half() {
        assert_eq!(crate::config::default_alpha(), 0.5);
    }

    #[test]
    fn reconstruction_loss_zero_on_identity() {
        let clip = generate_clip(&GenerationRequest::new(
            ActionLabel::Sitting,
            default_profile(Condition::Mci, None).unwrap(),
            9,
        ))
        .unwrap();
        assert_eq!(reconstruction_loss(&clip, &clip).unwrap(), 0.0);
        let shifted = clip.map_positions(|p| p + synact_skeleton::Vec3::new(0.1, 0.0, 0.0));
        let loss = reconstruction_loss(&clip, &shifted).unwrap();
        assert!((loss - 0.01).abs() < 1e-12);
    }
}
