//! `synact compare` — comparison report plus plot-ready CSVs.

use std::path::{Path, PathBuf};

use clap::Args;
use synact_metrics::{
    compare_report, correlation_matrix, dtw_align, histogram, mean_feature_curve,
    pooled_feature_values, warped_pair, FeatureId, DEFAULT_HISTOGRAM_BINS,
};

use super::{load_clips, prepare_out_dir, CliError, CmdResult};

#[derive(Args)]
pub struct CompareArgs {
    /// Directory of reference ("real") clips.
    #[arg(long)]
    real: PathBuf,

    /// Directory of synthetic clips.
    #[arg(long)]
    synth: PathBuf,

    /// Histogram bin count.
    #[arg(long, default_value_t = DEFAULT_HISTOGRAM_BINS)]
    bins: usize,
}

fn two_column_csv(header: (&str, &str), rows: impl Iterator<Item = (f64, f64)>) -> String {
    let mut out = format!("{},{}\n", header.0, header.1);
    for (a, b) in rows {
        out.push_str(&format!("{a},{b}\n"));
    }
    out
}

pub fn run(args: &CompareArgs, out: &Path) -> CmdResult {
    let real = load_clips(&args.real)?;
    let synth = load_clips(&args.synth)?;
    let report = compare_report(&real, &synth).map_err(CliError::validation)?;
    prepare_out_dir(out)?;
    super::write_text(&out.join("report.csv"), &report.to_csv())?;

    // Per-feature histograms and DTW-warped mean curves, two columns each.
    let mut curves: Vec<Vec<f64>> = Vec::with_capacity(FeatureId::ALL.len() * 2);
    let mut labels: Vec<String> = Vec::with_capacity(FeatureId::ALL.len() * 2);
    for feature in FeatureId::ALL {
        for (tag, clips) in [("real", &real), ("synth", &synth)] {
            let pool = pooled_feature_values(clips, feature).map_err(CliError::validation)?;
            let hist = histogram(&pool, args.bins).map_err(CliError::validation)?;
            super::write_text(
                &out.join(format!("hist_{}_{tag}.csv", feature.name())),
                &two_column_csv(("bin_edge", "count"), hist.iter().map(|(e, c)| (*e, *c as f64))),
            )?;
        }

        let real_curve = mean_feature_curve(&real, feature).map_err(CliError::validation)?;
        let synth_curve = mean_feature_curve(&synth, feature).map_err(CliError::validation)?;
        let alignment = dtw_align(&real_curve, &synth_curve).map_err(CliError::validation)?;
        let (wr, ws) =
            warped_pair(&real_curve, &synth_curve, &alignment.path).map_err(CliError::validation)?;
        super::write_text(
            &out.join(format!("warped_{}_real.csv", feature.name())),
            &two_column_csv(("step", "value"), wr.iter().enumerate().map(|(i, v)| (i as f64, *v))),
        )?;
        super::write_text(
            &out.join(format!("warped_{}_synth.csv", feature.name())),
            &two_column_csv(("step", "value"), ws.iter().enumerate().map(|(i, v)| (i as f64, *v))),
        )?;

        labels.push(format!("{}_R", feature.name()));
        curves.push(real_curve);
        labels.push(format!("{}_S", feature.name()));
        curves.push(synth_curve);
    }

    // Heatmap source: pairwise DTW-warped correlations over all labeled
    // mean curves.
    let matrix = correlation_matrix(&curves).map_err(CliError::validation)?;
    let mut csv = String::from("curve");
    for label in &labels {
        csv.push(',');
        csv.push_str(label);
    }
    csv.push('\n');
    for (label, row) in labels.iter().zip(matrix.iter()) {
        csv.push_str(label);
        for v in row {
            csv.push_str(&format!(",{v}"));
        }
        csv.push('\n');
    }
    super::write_text(&out.join("correlation_matrix.csv"), &csv)?;

    println!("compared {} real vs {} synthetic clips over {} features", real.len(), synth.len(), FeatureId::ALL.len());
    Ok(())
}
