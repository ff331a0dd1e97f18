//! `synact render` — rasterize a clip as 16-bit depth frames.

use std::path::{Path, PathBuf};

use clap::Args;
use synact_render::{render_depth, write_pgm_sequence, CameraModel, DEFAULT_BONE_RADIUS_M};

use super::{CliError, CmdResult};

#[derive(Args)]
pub struct RenderArgs {
    /// Clip file to render.
    #[arg(long)]
    clip: PathBuf,

    #[arg(long, default_value_t = 320)]
    width: usize,

    #[arg(long, default_value_t = 240)]
    height: usize,

    /// Focal length in pixels (applied to both axes).
    #[arg(long, default_value_t = 280.0)]
    focal: f64,

    #[arg(long, default_value_t = 0.5)]
    near: f64,

    #[arg(long, default_value_t = 6.0)]
    far: f64,

    /// Capsule radius in meters.
    #[arg(long, default_value_t = DEFAULT_BONE_RADIUS_M)]
    radius: f64,
}

pub fn run(args: &RenderArgs, out: &Path) -> CmdResult {
    let clip = synact_skeleton::io::load_clip(&args.clip).map_err(CliError::validation)?;
    let camera = CameraModel {
        fx: args.focal,
        fy: args.focal,
        cx: args.width as f64 / 2.0,
        cy: args.height as f64 / 2.0,
        width: args.width,
        height: args.height,
        near_m: args.near,
        far_m: args.far,
    };
    camera.validate().map_err(CliError::validation)?;
    let frames = render_depth(&clip, &camera, args.radius).map_err(CliError::validation)?;

    let stem = args.clip.file_stem().and_then(|s| s.to_str()).unwrap_or("clip");
    let dir = out.join(format!("depth_{stem}"));
    let paths =
        write_pgm_sequence(&frames, &dir).map_err(|e| CliError::Internal(anyhow::anyhow!(e)))?;
    println!("wrote {} frames to {}", paths.len(), dir.display());
    Ok(())
}
