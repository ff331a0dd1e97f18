//! Pinhole camera model and 16-bit depth quantization.

use crate::error::{RenderError, Result};

/// Pinhole intrinsics plus clip planes. The camera looks down +z with +x to
/// the right and +y up; image rows run downward. Depth values are the z
/// coordinate of the nearest surface, quantized linearly over
/// `[near_m, far_m]` into 1..=65535 with 0 reserved for no-hit.
#[derive(Debug, Clone, PartialEq)]
pub struct CameraModel {
    pub fx: f64,
    pub fy: f64,
    pub cx: f64,
    pub cy: f64,
    pub width: usize,
    pub height: usize,
    pub near_m: f64,
    pub far_m: f64,
}

impl Default for CameraModel {
    /// Indoor-monitoring defaults: 320×240 at f = 280 px, clip 0.5–6 m.
    fn default() -> CameraModel {
        CameraModel {
            fx: 280.0,
            fy: 280.0,
            cx: 160.0,
            cy: 120.0,
            width: 320,
            height: 240,
            near_m: 0.5,
            far_m: 6.0,
        }
    }
}

impl CameraModel {
    /// Quarter-resolution variant with the same field of view, used where
    /// many clips must render quickly.
    pub fn small() -> CameraModel {
        CameraModel {
            fx: 140.0,
            fy: 140.0,
            cx: 80.0,
            cy: 60.0,
            width: 160,
            height: 120,
            near_m: 0.5,
            far_m: 6.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.width < 16 || self.height < 16 {
            return Err(RenderError::InvalidCamera(format!(
                "{}x{} below the 16-pixel minimum",
                self.width, self.height
            )));
        }
        if self.width > 8192 || self.height > 8192 {
            return Err(RenderError::InvalidCamera(format!(
                "{}x{} above the 8192-pixel maximum",
                self.width, self.height
            )));
        }
        if !(self.near_m > 0.0 && self.near_m < self.far_m) {
            return Err(RenderError::InvalidCamera(format!(
                "clip range [{}, {}] invalid",
                self.near_m, self.far_m
            )));
        }
        if self.fx <= 0.0 || self.fy <= 0.0 {
            return Err(RenderError::InvalidCamera("non-positive focal length".into()));
        }
        Ok(())
    }

    /// Size of one quantization step in meters.
    pub fn depth_step(&self) -> f64 {
        (self.far_m - self.near_m) / 65534.0
    }

    /// Quantize a metric depth inside `[near, far]` to a nonzero 16-bit
    /// code.
    pub fn quantize(&self, depth_m: f64) -> u16 {
        let t = (depth_m - self.near_m) / (self.far_m - self.near_m);
        1 + (t.clamp(0.0, 1.0) * 65534.0).round() as u16
    }

    /// Metric depth for a nonzero code.
    pub fn dequantize(&self, code: u16) -> f64 {
        self.near_m + (code - 1) as f64 * self.depth_step()
    }
}

/// One rendered depth frame: row-major 16-bit codes, 0 = no hit.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthFrame {
    pub width: usize,
    pub height: usize,
    pub data: Vec<u16>,
}

impl DepthFrame {
    pub fn empty(width: usize, height: usize) -> DepthFrame {
        DepthFrame { width, height, data: vec![0; width * height] }
    }

    pub fn get(&self, x: usize, y: usize) -> u16 {
        self.data[y * self.width + x]
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| **v != 0).count()
    }

    pub fn is_empty_silhouette(&self) -> bool {
        self.data.iter().all(|v| *v == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantization_round_trip_within_one_step() {
        let cam = CameraModel::default();
        let step = cam.depth_step();
        for i in 0..2000 {
            let d = cam.near_m + (cam.far_m - cam.near_m) * (i as f64 / 1999.0);
            let q = cam.quantize(d);
            assert!(q >= 1);
            let back = cam.dequantize(q);
            assert!((back - d).abs() <= step, "depth {d}: {back}");
        }
    }

    #[test]
    fn quantize_clamps_to_valid_codes() {
        let cam = CameraModel::default();
        assert_eq!(cam.quantize(cam.near_m), 1);
        assert_eq!(cam.quantize(cam.far_m), 65535);
    }

    #[test]
    fn camera_validation() {
        assert!(CameraModel::default().validate().is_ok());
        assert!(CameraModel::small().validate().is_ok());
        let bad = CameraModel { width: 8, ..CameraModel::default() };
        assert!(bad.validate().is_err());
        let bad = CameraModel { width: 100_000, ..CameraModel::default() };
        assert!(bad.validate().is_err());
        let bad = CameraModel { near_m: 7.0, ..CameraModel::default() };
        assert!(bad.validate().is_err());
    }
}
