//! Silhouette statistics extracted from rendered depth frames.

use crate::camera::DepthFrame;
use crate::error::{RenderError, Result};

/// Per-frame silhouette series over the non-empty frames of a depth clip.
/// All values are normalized by the frame geometry so they are resolution
/// independent: area as a fraction of the pixel count, centroid in [0, 1],
/// bounding height as a fraction of the frame height.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthSeries {
    pub area: Vec<f64>,
    pub centroid_x: Vec<f64>,
    pub centroid_y: Vec<f64>,
    pub height: Vec<f64>,
}

/// Dimension of [`depth_features`] output: (mean, ROM, mean speed, speed
/// ROM) for each of the four silhouette series.
pub const DEPTH_FEATURE_DIM: usize = 16;

/// Extract the silhouette series from rendered frames, skipping frames with
/// an empty silhouette. Errors when every frame is empty.
pub fn depth_series(frames: &[DepthFrame]) -> Result<DepthSeries> {
    if frames.is_empty() {
        return Err(RenderError::NoFrames);
    }
    let mut series = DepthSeries {
        area: Vec::new(),
        centroid_x: Vec::new(),
        centroid_y: Vec::new(),
        height: Vec::new(),
    };
    for frame in frames {
        let mut count = 0usize;
        let mut sum_x = 0.0;
        let mut sum_y = 0.0;
        let mut row_min = usize::MAX;
        let mut row_max = 0usize;
        for y in 0..frame.height {
            for x in 0..frame.width {
                if frame.get(x, y) != 0 {
                    count += 1;
                    sum_x += x as f64;
                    sum_y += y as f64;
                    row_min = row_min.min(y);
                    row_max = row_max.max(y);
                }
            }
        }
        if count == 0 {
            continue;
        }
        let n = count as f64;
        series.area.push(n / (frame.width * frame.height) as f64);
        series.centroid_x.push(sum_x / n / (frame.width - 1) as f64);
        series.centroid_y.push(sum_y / n / (frame.height - 1) as f64);
        series.height.push((row_max - row_min + 1) as f64 / frame.height as f64);
    }
    if series.area.is_empty() {
        return Err(RenderError::DegenerateSilhouette);
    }
    Ok(series)
}

fn summarize(values: &[f64], fps: f64, out: &mut Vec<f64>) {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let speeds: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs() * fps).collect();
    let (speed_mean, speed_rom) = if speeds.is_empty() {
        (0.0, 0.0)
    } else {
        let m = speeds.iter().sum::<f64>() / speeds.len() as f64;
        let lo = speeds.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = speeds.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (m, hi - lo)
    };
    out.extend([mean, max - min, speed_mean, speed_rom]);
}

/// Fixed-order feature vector over the silhouette series, deterministic per
/// input: `(mean, ROM, mean speed, speed ROM)` for area, centroid x,
/// centroid y and bounding height.
pub fn depth_features(frames: &[DepthFrame], fps: f64) -> Result<Vec<f64>> {
    let series = depth_series(frames)?;
    let mut out = Vec::with_capacity(DEPTH_FEATURE_DIM);
    summarize(&series.area, fps, &mut out);
    summarize(&series.centroid_x, fps, &mut out);
    summarize(&series.centroid_y, fps, &mut out);
    summarize(&series.height, fps, &mut out);
    debug_assert_eq!(out.len(), DEPTH_FEATURE_DIM);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame_with_block(w: usize, h: usize, x0: usize, y0: usize, x1: usize, y1: usize) -> DepthFrame {
        let mut frame = DepthFrame::empty(w, h);
        for y in y0..=y1 {
            for x in x0..=x1 {
                frame.data[y * w + x] = 1000;
            }
        }
        frame
    }

    #[test]
    fn all_empty_frames_is_an_error() {
        let frames = vec![DepthFrame::empty(32, 32); 4];
        assert!(matches!(depth_features(&frames, 30.0), Err(RenderError::DegenerateSilhouette)));
    }

    #[test]
    fn static_silhouette_zero_speeds() {
        let frames = vec![frame_with_block(32, 32, 8, 8, 15, 23); 5];
        let f = depth_features(&frames, 30.0).unwrap();
        // Speed means (indices 2, 6, 10, 14) and speed ROMs all zero.
        for idx in [2, 3, 6, 7, 10, 11, 14, 15] {
            assert_eq!(f[idx], 0.0);
        }
        // Height fraction of the 16-row block.
        assert!((f[12] - 16.0 / 32.0).abs() < 1e-12);
    }

    #[test]
    fn block_geometry_reflected_in_series() {
        let frames = vec![
            frame_with_block(32, 32, 4, 4, 11, 11),
            frame_with_block(32, 32, 4, 4, 11, 19),
        ];
        let series = depth_series(&frames).unwrap();
        assert_eq!(series.area.len(), 2);
        assert!(series.area[1] > series.area[0]);
        assert!(series.height[1] > series.height[0]);
        assert!(series.centroid_y[1] > series.centroid_y[0]);
    }

    #[test]
    fn empty_frames_are_skipped_not_fatal() {
        let frames = vec![
            DepthFrame::empty(32, 32),
            frame_with_block(32, 32, 8, 8, 12, 12),
            DepthFrame::empty(32, 32),
        ];
        let series = depth_series(&frames).unwrap();
        assert_eq!(series.area.len(), 1);
    }
}
