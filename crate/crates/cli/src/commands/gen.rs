//! `synact gen` — generate clips.

use std::path::Path;

use clap::Args;
use serde::{Deserialize, Serialize};
use synact_skeleton::{seed, ActionLabel, Condition};
use synact_synth::{default_profile, generate_clip, GenerationRequest};

use super::{prepare_out_dir, CliError, CmdResult};

#[derive(Args)]
pub struct GenArgs {
    /// Action to generate (sitting, standing, walking, turning, lying,
    /// sit_to_stand, stand_to_sit).
    #[arg(long)]
    action: Option<String>,

    /// Cognitive condition: AD, MCI or NC.
    #[arg(long)]
    condition: Option<String>,

    /// MoCA score in [0, 30]; interpolates the profile between condition
    /// defaults.
    #[arg(long)]
    moca: Option<u8>,

    /// ZBI score in [0, 88], carried as metadata.
    #[arg(long)]
    zbi: Option<u8>,

    #[arg(long, default_value_t = 0.0)]
    viewpoint: f64,

    #[arg(long, default_value_t = 3.0)]
    duration: f64,

    #[arg(long, default_value_t = 30.0)]
    fps: f64,

    /// Number of clips to generate (per-clip seeds derive from the global
    /// seed).
    #[arg(long, default_value_t = 1)]
    count: usize,

    /// Request document (TOML) mirroring the prompt fields: action,
    /// condition, moca_score, viewpoint_deg, duration_s, fps, seed.
    /// Flags override individual fields.
    #[arg(long)]
    request: Option<std::path::PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
struct RequestDoc {
    action: Option<String>,
    condition: Option<String>,
    moca_score: Option<u8>,
    zbi_score: Option<u8>,
    viewpoint_deg: Option<f64>,
    duration_s: Option<f64>,
    fps: Option<f64>,
    seed: Option<u64>,
    count: Option<usize>,
}

#[derive(Serialize)]
struct Manifest<'a> {
    action: &'a str,
    condition: &'a str,
    moca_score: Option<u8>,
    zbi_score: Option<u8>,
    viewpoint_deg: f64,
    duration_s: f64,
    fps: f64,
    global_seed: u64,
    clips: Vec<ManifestClip>,
}

#[derive(Serialize)]
struct ManifestClip {
    file: String,
    seed: u64,
}

pub fn run(args: &GenArgs, global_seed: u64, out: &Path) -> CmdResult {
    let doc: RequestDoc = match &args.request {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
            toml::from_str(&text).map_err(CliError::validation)?
        }
        None => RequestDoc::default(),
    };

    let action_name = args.action.clone().or(doc.action).ok_or_else(|| {
        CliError::validation("an action is required (--action or request file)")
    })?;
    let action = ActionLabel::parse(&action_name)
        .ok_or_else(|| CliError::validation(format!("unknown action {action_name:?}")))?;
    let condition_name = args.condition.clone().or(doc.condition).unwrap_or_else(|| "NC".into());
    let condition = Condition::parse(&condition_name)
        .ok_or_else(|| CliError::validation(format!("unknown condition {condition_name:?}")))?;
    let moca = args.moca.or(doc.moca_score);
    let zbi = args.zbi.or(doc.zbi_score);
    if let Some(z) = zbi {
        if z > 88 {
            return Err(CliError::validation(format!("zbi {z} outside [0, 88]")));
        }
    }
    let viewpoint = doc.viewpoint_deg.unwrap_or(args.viewpoint);
    let duration = doc.duration_s.unwrap_or(args.duration);
    let fps = doc.fps.unwrap_or(args.fps);
    let global_seed = doc.seed.unwrap_or(global_seed);
    let count = doc.count.unwrap_or(args.count).max(1);

    let profile = default_profile(condition, moca).map_err(CliError::validation)?;
    prepare_out_dir(out)?;

    let mut manifest_clips = Vec::with_capacity(count);
    for i in 0..count {
        let clip_seed = seed::derive_indexed(global_seed, "gen", i as u64);
        let request = GenerationRequest {
            action,
            profile: profile.clone(),
            duration_s: duration,
            fps,
            viewpoint_deg: viewpoint,
            seed: clip_seed,
        };
        let mut clip = generate_clip(&request).map_err(CliError::validation)?;
        clip.metadata.moca_score = moca;
        clip.metadata.zbi_score = zbi;
        let file = format!("{}_{}_{clip_seed:016x}.json", action.name(), condition.name());
        synact_skeleton::io::save_clip(&clip, out.join(&file))
            .map_err(|e| CliError::Internal(anyhow::anyhow!(e)))?;
        println!("wrote {}", out.join(&file).display());
        manifest_clips.push(ManifestClip { file, seed: clip_seed });
    }

    let manifest = Manifest {
        action: action.name(),
        condition: condition.name(),
        moca_score: moca,
        zbi_score: zbi,
        viewpoint_deg: viewpoint,
        duration_s: duration,
        fps,
        global_seed,
        clips: manifest_clips,
    };
    let mut text = serde_json::to_string_pretty(&manifest)
        .map_err(|e| CliError::Internal(e.into()))?;
    text.push('\n');
    super::write_text(&out.join("manifest.json"), &text)
}
