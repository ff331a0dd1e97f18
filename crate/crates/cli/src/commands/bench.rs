//! `synact bench` — the imbalanced-recognition experiment.

use std::path::{Path, PathBuf};

use clap::Args;
use synact_harbench::{
    build_imbalanced_trainset, build_testset, results_to_csv, run_depth_experiment,
    run_experiment, BenchConfig, Track,
};
use synact_render::CameraModel;

use super::{prepare_out_dir, CliError, CmdResult};

#[derive(Args)]
pub struct BenchArgs {
    /// Experiment configuration (TOML). Defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Track when no config file is given: skeleton or depth.
    #[arg(long, default_value = "skeleton")]
    track: String,
}

pub fn run(args: &BenchArgs, global_seed: u64, out: &Path) -> CmdResult {
    let config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
            BenchConfig::from_toml(&text).map_err(CliError::validation)?
        }
        None => match args.track.as_str() {
            "skeleton" => BenchConfig::default_skeleton(global_seed),
            "depth" => BenchConfig::default_depth(global_seed),
            other => return Err(CliError::validation(format!("unknown track {other:?}"))),
        },
    };

    println!(
        "building {} training clips and {} test clips",
        config.distribution.total(),
        config.test_per_class * synact_harbench::BENCH_ACTIONS.len()
    );
    let train = build_imbalanced_trainset(&config.distribution, config.gen_params, config.seed)
        .map_err(CliError::validation)?;
    let test = build_testset(config.test_per_class, config.gen_params, config.seed)
        .map_err(CliError::validation)?;

    let results = match config.track {
        Track::Skeleton => run_experiment(
            &config.strategies,
            &train,
            &test,
            config.gen_params,
            &config.train_config,
            config.seed,
        ),
        Track::Depth => run_depth_experiment(
            &config.strategies,
            &train,
            &test,
            config.gen_params,
            &CameraModel::small(),
            &config.train_config,
            config.seed,
        ),
    }
    .map_err(CliError::validation)?;

    prepare_out_dir(out)?;
    let table = results_to_csv(&results);
    super::write_text(&out.join("results.csv"), &table)?;
    for result in &results {
        super::write_text(
            &out.join(format!("confusion_{}.csv", result.strategy)),
            &result.confusion_to_csv(),
        )?;
    }
    print!("{table}");
    for result in &results {
        println!(
            "{}: min class {:.2}%, overall {:.2}% ({} training clips)",
            result.strategy,
            result.min_class_accuracy_pct(),
            result.overall_accuracy_pct(),
            result.train_size
        );
    }
    Ok(())
}
