//! Property tests over the metric primitives.

use proptest::prelude::*;
use synact_metrics::{
    dtw_align, histogram, pearson_correlation, range_of_motion, warped_pair, welch_t_test,
};

fn finite_series(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1e3..1e3f64, 1..max_len)
}

proptest! {
    #[test]
    fn dtw_self_distance_zero_and_nonnegative(a in finite_series(24), b in finite_series(24)) {
        let self_align = dtw_align(&a, &a).unwrap();
        prop_assert_eq!(self_align.distance, 0.0);
        let align = dtw_align(&a, &b).unwrap();
        prop_assert!(align.distance >= 0.0);
        prop_assert_eq!(align.distance, dtw_align(&b, &a).unwrap().distance);
        // Boundary and monotonicity.
        prop_assert_eq!(*align.path.first().unwrap(), (0, 0));
        prop_assert_eq!(*align.path.last().unwrap(), (a.len() - 1, b.len() - 1));
        for w in align.path.windows(2) {
            prop_assert!(w[1].0 >= w[0].0 && w[1].1 >= w[0].1);
        }
        let (wa, wb) = warped_pair(&a, &b, &align.path).unwrap();
        prop_assert_eq!(wa.len(), align.path.len());
        prop_assert_eq!(wb.len(), align.path.len());
    }

    #[test]
    fn rom_is_nonnegative_and_scale_equivariant(xs in finite_series(32), k in 0.01..50.0f64) {
        let rom = range_of_motion(&xs).unwrap();
        prop_assert!(rom >= 0.0);
        let scaled: Vec<f64> = xs.iter().map(|v| v * k).collect();
        let scaled_rom = range_of_motion(&scaled).unwrap();
        prop_assert!((scaled_rom - k * rom).abs() <= 1e-9 * (1.0 + k * rom.abs()));
    }

    #[test]
    fn histogram_counts_sum_to_pool_size(pool in finite_series(64), bins in 1..40usize) {
        let hist = histogram(&pool, bins).unwrap();
        prop_assert_eq!(hist.len(), bins);
        prop_assert_eq!(hist.iter().map(|(_, c)| *c).sum::<usize>(), pool.len());
    }

    #[test]
    fn pearson_affine_equivariance(
        xs in prop::collection::vec(-100.0..100.0f64, 4..20),
        ys_seed in prop::collection::vec(-100.0..100.0f64, 4..20),
        alpha in prop_oneof![-10.0..-0.1f64, 0.1..10.0f64],
        beta in -50.0..50.0f64,
    ) {
        let n = xs.len().min(ys_seed.len());
        let xs = &xs[..n];
        let ys = &ys_seed[..n];
        prop_assume!(xs.iter().any(|v| *v != xs[0]));
        prop_assume!(ys.iter().any(|v| *v != ys[0]));
        let base = pearson_correlation(xs, ys).unwrap();
        let transformed: Vec<f64> = xs.iter().map(|v| alpha * v + beta).collect();
        prop_assume!(transformed.iter().any(|v| *v != transformed[0]));
        let got = pearson_correlation(&transformed, ys).unwrap();
        prop_assert!((got - alpha.signum() * base).abs() <= 1e-6);
    }

    #[test]
    fn welch_p_in_unit_interval_and_swap_symmetric(
        xs in prop::collection::vec(-50.0..50.0f64, 2..16),
        ys in prop::collection::vec(-50.0..50.0f64, 2..16),
    ) {
        prop_assume!(xs.iter().any(|v| *v != xs[0]) || ys.iter().any(|v| *v != ys[0]));
        let a = welch_t_test(&xs, &ys).unwrap();
        prop_assert!((0.0..=1.0).contains(&a.p));
        let b = welch_t_test(&ys, &xs).unwrap();
        prop_assert!((a.t + b.t).abs() <= 1e-9 * (1.0 + a.t.abs()));
        prop_assert!((a.p - b.p).abs() <= 1e-12);
    }
}
