//! `synact parse` — ingest capture-format skeleton text.

use std::path::{Path, PathBuf};

use clap::Args;
use synact_skeleton::capture::parse_capture_skeleton;
use synact_skeleton::{ActionLabel, Condition};

use super::{prepare_out_dir, CliError, CmdResult};

#[derive(Args)]
pub struct ParseArgs {
    /// Capture-format skeleton file.
    #[arg(long)]
    input: PathBuf,

    /// Action label to stamp on the parsed clips (the capture format does
    /// not carry one).
    #[arg(long, default_value = "standing")]
    action: String,

    /// Condition label to stamp on the parsed clips.
    #[arg(long, default_value = "NC")]
    condition: String,
}

pub fn run(args: &ParseArgs, out: &Path) -> CmdResult {
    let action = ActionLabel::parse(&args.action)
        .ok_or_else(|| CliError::validation(format!("unknown action {:?}", args.action)))?;
    let condition = Condition::parse(&args.condition)
        .ok_or_else(|| CliError::validation(format!("unknown condition {:?}", args.condition)))?;
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::validation(format!("{}: {e}", args.input.display())))?;
    let mut clips = parse_capture_skeleton(&text).map_err(CliError::validation)?;
    if clips.is_empty() {
        return Err(CliError::validation("capture file contains no bodies"));
    }
    prepare_out_dir(out)?;
    let stem = args.input.file_stem().and_then(|s| s.to_str()).unwrap_or("capture");
    for (i, clip) in clips.iter_mut().enumerate() {
        clip.action = action;
        clip.metadata.condition = condition;
        let path = out.join(format!("{stem}_body{i}.json"));
        synact_skeleton::io::save_clip(clip, &path)
            .map_err(|e| CliError::Internal(anyhow::anyhow!(e)))?;
        println!("wrote {} ({} frames)", path.display(), clip.frame_count());
    }
    Ok(())
}
