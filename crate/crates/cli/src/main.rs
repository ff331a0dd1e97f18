//! Command-line front end wiring the workspace into user workflows.
//!
//! Subcommands: `gen`, `parse`, `compare`, `fit`, `bench`, `render`,
//! `metrics`. All outputs are plain text (clip documents, CSVs, binary
//! PGMs); plotting is left to external tools. A single global `--seed`
//! threads through every stochastic component via per-component sub-seeds
//! (`seed::derive(global, component)`), so identical invocations produce
//! byte-identical outputs.
//!
//! Exit codes: 0 success, 2 validation/usage error, 1 internal error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{bench, compare, fit, gen, metrics, parse, render, CliError};

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "SYNACT_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "synact",
    about = "Synthesize condition-conditioned skeleton activity clips, validate them with motion metrics, and benchmark augmentation strategies",
    version
)]
struct Cli {
    /// Global seed; every stochastic component derives its own sub-seed
    /// from it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output directory (falls back to $SYNACT_OUT_DIR, then the current
    /// directory).
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate clips for an action and cognitive condition.
    Gen(gen::GenArgs),
    /// Parse a capture-format skeleton file into native clips.
    Parse(parse::ParseArgs),
    /// Compare a real and a synthetic clip directory.
    Compare(compare::CompareArgs),
    /// Fit profile parameters to the motion metrics of target clips.
    Fit(fit::FitArgs),
    /// Run the imbalanced-recognition benchmark.
    Bench(bench::BenchArgs),
    /// Render a clip as 16-bit depth frames.
    Render(render::RenderArgs),
    /// Emit the metric profile and feature series of a clip.
    Metrics(metrics::MetricsArgs),
}

fn out_dir(cli: &Cli) -> PathBuf {
    cli.out_dir
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = out_dir(&cli);
    let result = match &cli.command {
        Command::Gen(args) => gen::run(args, cli.seed, &out),
        Command::Parse(args) => parse::run(args, &out),
        Command::Compare(args) => compare::run(args, &out),
        Command::Fit(args) => fit::run(args, cli.seed, &out),
        Command::Bench(args) => bench::run(args, cli.seed, &out),
        Command::Render(args) => render::run(args, &out),
        Command::Metrics(args) => metrics::run(args, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(error)) => {
            eprintln!("internal error: {error:#}");
            ExitCode::from(1)
        }
    }
}
