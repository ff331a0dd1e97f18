//! Feature series and the scalar reductions applied to them.

use crate::error::{MetricsError, Result};

/// Unit of a feature series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Units {
    Degrees,
    MetersPerSecond,
}

impl Units {
    pub fn name(self) -> &'static str {
        match self {
            Units::Degrees => "degrees",
            Units::MetersPerSecond => "m/s",
        }
    }
}

/// A time-ordered sequence of scalar feature values for one clip.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureSeries {
    pub name: String,
    pub values: Vec<f64>,
    pub units: Units,
}

impl FeatureSeries {
    pub fn mean(&self) -> f64 {
        mean(&self.values)
    }

    pub fn range_of_motion(&self) -> Result<f64> {
        range_of_motion(&self.values)
    }
}

pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample variance (n − 1 denominator).
pub fn sample_variance(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (values.len() - 1) as f64
}

/// Range of motion: max − min over the series. Non-negative by construction.
pub fn range_of_motion(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(MetricsError::Empty("range_of_motion".into()));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok(hi - lo)
}

/// Equal-width histogram over `[min, max]` of the pool. The final bin is
/// closed on the right, so counts always sum to the pool size. A constant
/// pool puts everything in the first bin.
pub fn histogram(pool: &[f64], bins: usize) -> Result<Vec<(f64, usize)>> {
    if pool.is_empty() {
        return Err(MetricsError::Empty("histogram".into()));
    }
    if bins == 0 {
        return Err(MetricsError::ZeroBins);
    }
    let lo = pool.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = pool.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &v in pool {
        let idx = if width > 0.0 {
            (((v - lo) / width) as usize).min(bins - 1)
        } else {
            0
        };
        counts[idx] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, c)| (lo + width * i as f64, c))
        .collect())
}

/// Default bin count used by report emission.
pub const DEFAULT_HISTOGRAM_BINS: usize = 30;

/// Linear-interpolation resample to exactly `len` samples spanning the same
/// time range. A single-sample series resamples to a constant.
pub fn resample_linear(values: &[f64], len: usize) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(MetricsError::Empty("resample".into()));
    }
    if len == 0 {
        return Ok(Vec::new());
    }
    if values.len() == 1 || len == 1 {
        return Ok(vec![values[0]; len]);
    }
    let scale = (values.len() - 1) as f64 / (len - 1) as f64;
    Ok((0..len)
        .map(|k| {
            let pos = k as f64 * scale;
            let i = (pos.floor() as usize).min(values.len() - 2);
            let frac = pos - i as f64;
            values[i] * (1.0 - frac) + values[i + 1] * frac
        })
        .collect())
}
