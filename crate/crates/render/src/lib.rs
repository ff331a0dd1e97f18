//! Depth-sensor adaptation for skeleton clips.
//!
//! Rasterizes the 24-bone skeleton as capsules into 16-bit depth frames
//! under a pinhole camera with z-buffering, extracts silhouette feature
//! series from the rendered frames, and writes frames as binary 16-bit
//! portable graymaps. Frames render independently, so per-frame parallelism
//! is safe; output assembly is ordered and deterministic.

pub mod camera;
pub mod error;
pub mod features;
pub mod pgm;
pub mod raster;

pub use camera::{CameraModel, DepthFrame};
pub use error::{RenderError, Result};
pub use features::{depth_features, depth_series, DepthSeries, DEPTH_FEATURE_DIM};
pub use pgm::{frame_to_pgm, pgm_from_bytes, read_pgm, write_pgm, write_pgm_sequence};
pub use raster::{render_depth, render_pose_depth, DEFAULT_BONE_RADIUS_M};
