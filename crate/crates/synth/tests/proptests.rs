//! Property tests over profiles and the metric loss.

use proptest::prelude::*;
use synact_metrics::{AngleSummary, JointMetrics, MetricProfile};
use synact_skeleton::{Condition, KeyJoint};
use synact_synth::{default_profile, default_table, metric_loss};

fn arb_profile_values() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-50.0..50.0f64, 28)
}

fn profile_from(values: &[f64]) -> MetricProfile {
    // 12 joints; the first eight carry angle components, mirroring the real
    // metric-profile layout.
    let mut iter = values.iter().copied();
    let joints = KeyJoint::metric_joints()
        .iter()
        .enumerate()
        .map(|(i, joint)| JointMetrics {
            joint: *joint,
            mean_speed_mps: iter.next().unwrap(),
            angle: (i < 8).then(|| AngleSummary {
                mean_deg: iter.next().unwrap(),
                rom_deg: iter.next().unwrap(),
            }),
        })
        .collect();
    MetricProfile::from_joints(joints)
}

proptest! {
    #[test]
    fn metric_loss_symmetric_nonnegative_zero_iff_equal(
        a in arb_profile_values(),
        b in arb_profile_values(),
    ) {
        let pa = profile_from(&a);
        let pb = profile_from(&b);
        let ab = metric_loss(&pa, &pb).unwrap();
        let ba = metric_loss(&pb, &pa).unwrap();
        prop_assert_eq!(ab.value, ba.value);
        prop_assert!(ab.value >= 0.0);
        prop_assert_eq!(ab.per_joint_terms.len(), 12);
        prop_assert_eq!(metric_loss(&pa, &pa).unwrap().value, 0.0);
        if a != b {
            prop_assert!(ab.value > 0.0);
        }
    }

    #[test]
    fn moca_map_is_monotone_and_bounded(lo in 0u8..=30, hi in 0u8..=30) {
        prop_assume!(lo < hi);
        let bounds = &default_table().bounds;
        for condition in Condition::ALL {
            let p_lo = default_profile(condition, Some(lo)).unwrap();
            let p_hi = default_profile(condition, Some(hi)).unwrap();
            prop_assert!(p_lo.validate(bounds).is_ok());
            prop_assert!(p_hi.validate(bounds).is_ok());
            prop_assert!(p_lo.walk_speed_mps <= p_hi.walk_speed_mps);
            prop_assert!(p_lo.stoop_angle_deg >= p_hi.stoop_angle_deg);
        }
    }
}
