//! Dynamic time warping with path recovery.

use crate::error::{MetricsError, Result};

/// Result of aligning two series: total distance and the warp path.
///
/// The path starts at `(0, 0)`, ends at `(len_a − 1, len_b − 1)`, is
/// monotone non-decreasing in both indices, and `distance` is the sum of
/// `|a[i] − b[j]|` over its cells.
#[derive(Debug, Clone, PartialEq)]
pub struct DtwAlignment {
    pub distance: f64,
    pub path: Vec<(usize, usize)>,
}

/// Classic dynamic-programming alignment with absolute-difference local cost
/// and unit step set {(1,0), (0,1), (1,1)}.
///
/// Ties during backtracking prefer the diagonal step, so aligning a series
/// with itself always yields the exact diagonal path.
pub fn dtw_align(a: &[f64], b: &[f64]) -> Result<DtwAlignment> {
    if a.is_empty() || b.is_empty() {
        return Err(MetricsError::Empty("dtw_align".into()));
    }
    let (m, n) = (a.len(), b.len());
    let mut dp = vec![f64::INFINITY; m * n];
    let idx = |i: usize, j: usize| i * n + j;

    for i in 0..m {
        for j in 0..n {
            let cost = (a[i] - b[j]).abs();
            let best_prev = if i == 0 && j == 0 {
                0.0
            } else {
                let mut best = f64::INFINITY;
                if i > 0 && j > 0 {
                    best = best.min(dp[idx(i - 1, j - 1)]);
                }
                if i > 0 {
                    best = best.min(dp[idx(i - 1, j)]);
                }
                if j > 0 {
                    best = best.min(dp[idx(i, j - 1)]);
                }
                best
            };
            dp[idx(i, j)] = cost + best_prev;
        }
    }

    let mut path = Vec::with_capacity(m.max(n));
    let (mut i, mut j) = (m - 1, n - 1);
    path.push((i, j));
    while i > 0 || j > 0 {
        let diag = if i > 0 && j > 0 { dp[idx(i - 1, j - 1)] } else { f64::INFINITY };
        let up = if i > 0 { dp[idx(i - 1, j)] } else { f64::INFINITY };
        let left = if j > 0 { dp[idx(i, j - 1)] } else { f64::INFINITY };
        if diag <= up && diag <= left {
            i -= 1;
            j -= 1;
        } else if up <= left {
            i -= 1;
        } else {
            j -= 1;
        }
        path.push((i, j));
    }
    path.reverse();

    Ok(DtwAlignment { distance: dp[idx(m - 1, n - 1)], path })
}

/// Expand two series along a warp path into equal-length aligned series:
/// `a'[k] = a[path[k].0]`, `b'[k] = b[path[k].1]`.
pub fn warped_pair(a: &[f64], b: &[f64], path: &[(usize, usize)]) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut wa = Vec::with_capacity(path.len());
    let mut wb = Vec::with_capacity(path.len());
    for &(i, j) in path {
        if i >= a.len() || j >= b.len() {
            return Err(MetricsError::PathOutOfRange { i, j, len_a: a.len(), len_b: b.len() });
        }
        wa.push(a[i]);
        wb.push(b[j]);
    }
    Ok((wa, wb))
}
