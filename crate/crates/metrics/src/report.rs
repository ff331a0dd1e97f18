//! Comparison reports between a real and a synthetic clip set.

use synact_skeleton::SkeletonClip;

use crate::angle::angle_series;
use crate::dtw::{dtw_align, warped_pair};
use crate::error::{MetricsError, Result};
use crate::features::{FeatureId, FeatureKind};
use crate::series::{mean, range_of_motion, resample_linear, FeatureSeries};
use crate::speed::speed_series;
use crate::stats::{pearson_correlation, welch_t_test};

/// Common length per-clip series are resampled to before averaging into the
/// per-set mean curve.
pub const RESAMPLE_LEN: usize = 100;

/// One row of the comparison report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRow {
    pub feature: FeatureId,
    pub mean_ratio: f64,
    pub rom_ratio: f64,
    pub correlation: f64,
    pub p_value: f64,
}

/// Table of per-feature comparison statistics, one row per report feature in
/// the fixed order of [`FeatureId::ALL`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub rows: Vec<ReportRow>,
}

impl ComparisonReport {
    pub fn row(&self, feature: FeatureId) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.feature == feature)
    }

    /// CSV with the fixed header `feature,mean_ratio,rom_ratio,correlation,p_value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("feature,mean_ratio,rom_ratio,correlation,p_value\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.feature.name(),
                row.mean_ratio,
                row.rom_ratio,
                row.correlation,
                row.p_value
            ));
        }
        out
    }
}

/// Series for any report feature: per-frame angle or per-step speed.
pub fn feature_series(clip: &SkeletonClip, feature: FeatureId) -> Result<FeatureSeries> {
    match feature.kind() {
        FeatureKind::Angle => angle_series(clip, feature),
        FeatureKind::Speed => {
            speed_series(clip, feature.speed_joint().expect("speed feature has joint"))
        }
    }
}

/// All values of one feature pooled across a clip set.
pub fn pooled_feature_values(clips: &[SkeletonClip], feature: FeatureId) -> Result<Vec<f64>> {
    let mut pool = Vec::new();
    for clip in clips {
        pool.extend(feature_series(clip, feature)?.values);
    }
    if pool.is_empty() {
        return Err(MetricsError::Empty(format!("no values pooled for {feature}")));
    }
    Ok(pool)
}

/// Mean curve of one feature over a clip set: each clip's series resampled
/// to [`RESAMPLE_LEN`] samples, then averaged pointwise.
pub fn mean_feature_curve(clips: &[SkeletonClip], feature: FeatureId) -> Result<Vec<f64>> {
    if clips.is_empty() {
        return Err(MetricsError::Empty("mean_feature_curve".into()));
    }
    let mut acc = vec![0.0; RESAMPLE_LEN];
    for clip in clips {
        let series = feature_series(clip, feature)?;
        let resampled = resample_linear(&series.values, RESAMPLE_LEN)?;
        for (a, v) in acc.iter_mut().zip(resampled.iter()) {
            *a += v;
        }
    }
    for a in acc.iter_mut() {
        *a /= clips.len() as f64;
    }
    Ok(acc)
}

fn is_constant(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Pearson correlation of two series after DTW warping.
///
/// Constant series make the coefficient undefined; the report convention is
/// 1.0 for two equal constants (perfectly aligned), 0.0 otherwise.
pub fn warped_correlation(a: &[f64], b: &[f64]) -> Result<f64> {
    let alignment = dtw_align(a, b)?;
    let (wa, wb) = warped_pair(a, b, &alignment.path)?;
    match (is_constant(&wa), is_constant(&wb)) {
        (true, true) => Ok(if (wa[0] - wb[0]).abs() <= 1e-12 { 1.0 } else { 0.0 }),
        (true, false) | (false, true) => Ok(0.0),
        (false, false) => pearson_correlation(&wa, &wb),
    }
}

/// Welch p-value with the degenerate case pinned down: when both samples
/// have zero variance the test statistic is undefined, so equal means read
/// as "no difference" (p = 1) and distinct means as "certain difference"
/// (p = 0).
fn report_p_value(x: &[f64], y: &[f64]) -> Result<f64> {
    let var = |s: &[f64]| s.iter().any(|v| *v != s[0]);
    if !var(x) && !var(y) {
        return Ok(if (x[0] - y[0]).abs() == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(welch_t_test(x, y)?.p)
}

/// Build the per-feature comparison table between a real and a synthetic
/// clip set sharing one action.
///
/// Per feature: mean ratio of pooled values (synthetic / real), ratio of
/// mean per-clip ROM, Pearson correlation of the DTW-warped mean curves, and
/// the Welch p-value over per-clip means (over pooled values when either set
/// has a single clip).
pub fn compare_report(
    real: &[SkeletonClip],
    synthetic: &[SkeletonClip],
) -> Result<ComparisonReport> {
    if real.is_empty() || synthetic.is_empty() {
        return Err(MetricsError::Empty("compare_report needs non-empty clip sets".into()));
    }
    let action = real[0].action;
    for clip in real.iter().chain(synthetic.iter()) {
        if clip.action != action {
            return Err(MetricsError::ActionMismatch(format!(
                "{} vs {}",
                action, clip.action
            )));
        }
    }

    let mut rows = Vec::with_capacity(FeatureId::ALL.len());
    for feature in FeatureId::ALL {
        let real_pool = pooled_feature_values(real, feature)?;
        let synth_pool = pooled_feature_values(synthetic, feature)?;

        let real_mean = mean(&real_pool);
        if real_mean == 0.0 {
            return Err(MetricsError::ZeroDenominator { feature: feature.name().into() });
        }
        let mean_ratio = mean(&synth_pool) / real_mean;

        let clip_roms = |clips: &[SkeletonClip]| -> Result<Vec<f64>> {
            clips
                .iter()
                .map(|c| range_of_motion(&feature_series(c, feature)?.values))
                .collect()
        };
        let real_rom = mean(&clip_roms(real)?);
        if real_rom == 0.0 {
            return Err(MetricsError::ZeroDenominator { feature: feature.name().into() });
        }
        let rom_ratio = mean(&clip_roms(synthetic)?) / real_rom;

        let real_curve = mean_feature_curve(real, feature)?;
        let synth_curve = mean_feature_curve(synthetic, feature)?;
        let correlation = warped_correlation(&real_curve, &synth_curve)?;

        let clip_means = |clips: &[SkeletonClip]| -> Result<Vec<f64>> {
            clips.iter().map(|c| Ok(mean(&feature_series(c, feature)?.values))).collect()
        };
        let p_value = if real.len() >= 2 && synthetic.len() >= 2 {
            report_p_value(&clip_means(real)?, &clip_means(synthetic)?)?
        } else {
            report_p_value(&real_pool, &synth_pool)?
        };

        rows.push(ReportRow { feature, mean_ratio, rom_ratio, correlation, p_value });
    }
    Ok(ComparisonReport { rows })
}

/// Pairwise DTW-warped correlation matrix over labeled curves. Symmetric by
/// construction with an exact unit diagonal.
pub fn correlation_matrix(curves: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = curves.len();
    let mut matrix = vec![vec![0.0; n]; n];
    for i in 0..n {
        matrix[i][i] = 1.0;
        for j in (i + 1)..n {
            let c = warped_correlation(&curves[i], &curves[j])?;
            matrix[i][j] = c;
            matrix[j][i] = c;
        }
    }
    Ok(matrix)
}
