//! `synact metrics` — per-clip motion metrics.

use std::path::{Path, PathBuf};

use clap::Args;
use synact_metrics::{feature_series, metric_profile, FeatureId};

use super::{prepare_out_dir, CliError, CmdResult};

#[derive(Args)]
pub struct MetricsArgs {
    /// Clip file to analyze.
    #[arg(long)]
    clip: PathBuf,
}

pub fn run(args: &MetricsArgs, out: &Path) -> CmdResult {
    let clip = synact_skeleton::io::load_clip(&args.clip).map_err(CliError::validation)?;
    let profile = metric_profile(&clip).map_err(CliError::validation)?;

    prepare_out_dir(out)?;
    let mut csv = String::from("joint,mean_speed_mps,mean_angle_deg,angle_rom_deg\n");
    for jm in profile.joints() {
        match jm.angle {
            Some(angle) => csv.push_str(&format!(
                "{},{},{},{}\n",
                jm.joint.name(),
                jm.mean_speed_mps,
                angle.mean_deg,
                angle.rom_deg
            )),
            None => csv.push_str(&format!("{},{},,\n", jm.joint.name(), jm.mean_speed_mps)),
        }
    }
    super::write_text(&out.join("metric_profile.csv"), &csv)?;

    for feature in FeatureId::ALL {
        let series = feature_series(&clip, feature).map_err(CliError::validation)?;
        let mut series_csv = String::from("step,value\n");
        for (i, v) in series.values.iter().enumerate() {
            series_csv.push_str(&format!("{i},{v}\n"));
        }
        super::write_text(&out.join(format!("series_{}.csv", feature.name())), &series_csv)?;
    }

    println!(
        "{}: {} frames at {} fps, {} metric joints",
        args.clip.display(),
        clip.frame_count(),
        clip.fps,
        profile.joint_count()
    );
    Ok(())
}
