//! `synact fit` — recover profile parameters from target clip metrics.

use std::path::{Path, PathBuf};

use clap::Args;
use synact_metrics::{metric_profile, AngleSummary, JointMetrics, MetricProfile};
use synact_skeleton::{seed, ActionLabel, Condition};
use synact_synth::{default_profile, fit_profile, FitOptions, ProfileParam};

use super::{load_clips, prepare_out_dir, CliError, CmdResult};

#[derive(Args)]
pub struct FitArgs {
    /// Directory of target clips (all sharing one action).
    #[arg(long)]
    target: PathBuf,

    /// Action whose template is fitted; defaults to the target clips'
    /// action.
    #[arg(long)]
    action: Option<String>,

    /// Objective evaluation budget.
    #[arg(long, default_value_t = 400)]
    budget: usize,

    /// Condition of the initial profile guess.
    #[arg(long, default_value = "NC")]
    condition: String,

    /// MoCA score of the initial guess.
    #[arg(long)]
    moca: Option<u8>,
}

/// Component-wise mean of per-clip metric profiles.
fn mean_profile(clips: &[synact_skeleton::SkeletonClip]) -> Result<MetricProfile, CliError> {
    let profiles: Vec<MetricProfile> = clips
        .iter()
        .map(|c| metric_profile(c).map_err(CliError::validation))
        .collect::<Result<_, _>>()?;
    let n = profiles.len() as f64;
    let joints = profiles[0]
        .joints()
        .iter()
        .enumerate()
        .map(|(j, first)| JointMetrics {
            joint: first.joint,
            mean_speed_mps: profiles.iter().map(|p| p.joints()[j].mean_speed_mps).sum::<f64>() / n,
            angle: first.angle.map(|_| AngleSummary {
                mean_deg: profiles
                    .iter()
                    .map(|p| p.joints()[j].angle.expect("same layout").mean_deg)
                    .sum::<f64>()
                    / n,
                rom_deg: profiles
                    .iter()
                    .map(|p| p.joints()[j].angle.expect("same layout").rom_deg)
                    .sum::<f64>()
                    / n,
            }),
        })
        .collect();
    Ok(MetricProfile::from_joints(joints))
}

pub fn run(args: &FitArgs, global_seed: u64, out: &Path) -> CmdResult {
    let clips = load_clips(&args.target)?;
    let action = match &args.action {
        Some(name) => ActionLabel::parse(name)
            .ok_or_else(|| CliError::validation(format!("unknown action {name:?}")))?,
        None => clips[0].action,
    };
    if let Some(other) = clips.iter().find(|c| c.action != action) {
        return Err(CliError::validation(format!(
            "target clips mix actions: {} vs {}",
            action, other.action
        )));
    }
    if args.budget == 0 {
        return Err(CliError::validation("budget must be at least 1"));
    }
    let condition = Condition::parse(&args.condition)
        .ok_or_else(|| CliError::validation(format!("unknown condition {:?}", args.condition)))?;
    let init = default_profile(condition, args.moca).map_err(CliError::validation)?;

    let target = mean_profile(&clips)?;
    let options = FitOptions {
        budget: args.budget,
        seed: seed::derive(global_seed, "fit"),
        duration_s: clips[0].duration_s(),
        fps: clips[0].fps,
        ..FitOptions::default()
    };
    let result = fit_profile(&target, action, &init, &options).map_err(CliError::validation)?;

    prepare_out_dir(out)?;
    let mut profile_csv = String::from("parameter,value\n");
    profile_csv.push_str(&format!("condition,{}\n", result.profile.condition.name()));
    for param in ProfileParam::ALL {
        profile_csv.push_str(&format!("{},{}\n", param.name(), param.get(&result.profile)));
    }
    profile_csv.push_str(&format!(
        "standup_oscillation_count,{}\n",
        result.profile.standup_oscillation_count
    ));
    super::write_text(&out.join("profile.csv"), &profile_csv)?;

    let mut trace_csv = String::from("evaluation,best_loss\n");
    for (i, loss) in result.trace.iter().enumerate() {
        trace_csv.push_str(&format!("{},{}\n", i + 1, loss));
    }
    super::write_text(&out.join("trace.csv"), &trace_csv)?;

    println!(
        "fitted {} over {} evaluations, final loss {:.6}",
        action, result.evaluations, result.best_loss
    );
    Ok(())
}
