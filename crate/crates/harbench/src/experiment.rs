//! The experiment harness: apply each strategy, train a classifier on
//! identical folds, and report per-class accuracy tables.

use std::collections::BTreeMap;

use synact_learn::{extract_features, train_classifier, ClassifierModel, TrainConfig};
use synact_render::{depth_features, render_depth, CameraModel, DEFAULT_BONE_RADIUS_M};
use synact_skeleton::{seed, ActionLabel, SkeletonClip};

use crate::dataset::{GenParams, BENCH_ACTIONS};
use crate::error::Result;
use crate::strategies::Strategy;

/// Per-class accuracy table and confusion matrix for one strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub strategy: String,
    /// Percent accuracy per test class.
    pub per_class_accuracy_pct: BTreeMap<ActionLabel, f64>,
    /// Rows = true class (benchmark actions), columns = predicted label
    /// over the full label set.
    pub confusion: Vec<Vec<usize>>,
    pub train_size: usize,
    pub test_size: usize,
}

impl ExperimentResult {
    pub fn min_class_accuracy_pct(&self) -> f64 {
        self.per_class_accuracy_pct.values().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn overall_accuracy_pct(&self) -> f64 {
        let total: usize = self.confusion.iter().map(|row| row.iter().sum::<usize>()).sum();
        let correct: usize = self
            .confusion
            .iter()
            .enumerate()
            .map(|(i, row)| row[BENCH_ACTIONS[i].class_index()])
            .sum();
        100.0 * correct as f64 / total as f64
    }

    /// Confusion matrix as CSV: `true_class` column then one column per
    /// predicted label.
    pub fn confusion_to_csv(&self) -> String {
        let mut out = String::from("true_class");
        for label in ActionLabel::ALL {
            out.push(',');
            out.push_str(label.name());
        }
        out.push('\n');
        for (i, row) in self.confusion.iter().enumerate() {
            out.push_str(BENCH_ACTIONS[i].name());
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Accuracy table over strategies as CSV in the benchmark layout:
/// `strategy,sitting,standing,walking,turning,lying`.
pub fn results_to_csv(results: &[ExperimentResult]) -> String {
    let mut out = String::from("strategy");
    for action in BENCH_ACTIONS {
        out.push(',');
        out.push_str(action.name());
    }
    out.push('\n');
    for result in results {
        out.push_str(&result.strategy);
        for action in BENCH_ACTIONS {
            let acc = result.per_class_accuracy_pct.get(&action).copied().unwrap_or(0.0);
            out.push_str(&format!(",{acc:.2}"));
        }
        out.push('\n');
    }
    out
}

fn evaluate(
    model: &ClassifierModel,
    test_features: &[(Vec<f64>, ActionLabel)],
    strategy: &str,
    train_size: usize,
) -> Result<ExperimentResult> {
    let mut confusion = vec![vec![0usize; ActionLabel::ALL.len()]; BENCH_ACTIONS.len()];
    for (features, truth) in test_features {
        let predicted = model.predict(features)?;
        let row = BENCH_ACTIONS.iter().position(|a| a == truth).expect("test label in bench set");
        confusion[row][predicted.class_index()] += 1;
    }
    let mut per_class = BTreeMap::new();
    for (i, action) in BENCH_ACTIONS.iter().enumerate() {
        let total: usize = confusion[i].iter().sum();
        if total > 0 {
            let correct = confusion[i][action.class_index()];
            per_class.insert(*action, 100.0 * correct as f64 / total as f64);
        }
    }
    Ok(ExperimentResult {
        strategy: strategy.to_string(),
        per_class_accuracy_pct: per_class,
        confusion,
        train_size,
        test_size: test_features.len(),
    })
}

fn run_with_extractor(
    strategies: &[Strategy],
    base_trainset: &[SkeletonClip],
    testset: &[SkeletonClip],
    gen_params: GenParams,
    train_config: &TrainConfig,
    seed_value: u64,
    extract: &dyn Fn(&SkeletonClip) -> Result<Vec<f64>>,
) -> Result<Vec<ExperimentResult>> {
    let test_features: Vec<(Vec<f64>, ActionLabel)> = testset
        .iter()
        .map(|clip| Ok((extract(clip)?, clip.action)))
        .collect::<Result<_>>()?;

    let mut results = Vec::with_capacity(strategies.len());
    for strategy in strategies {
        let strategy_seed = seed::derive(seed_value, &format!("strategy/{}", strategy.name()));
        let trainset = strategy.apply(base_trainset, gen_params, strategy_seed)?;
        let train_features: Vec<(Vec<f64>, ActionLabel)> = trainset
            .iter()
            .map(|clip| Ok((extract(clip)?, clip.action)))
            .collect::<Result<_>>()?;
        let config = TrainConfig {
            seed: seed::derive(seed_value, &format!("classifier/{}", strategy.name())),
            ..train_config.clone()
        };
        let trained = train_classifier(&train_features, &config)?;
        results.push(evaluate(&trained.model, &test_features, strategy.name(), trainset.len())?);
    }
    Ok(results)
}

/// Run the skeleton-feature experiment: one classifier per strategy on
/// identical folds, deterministic for a fixed seed.
pub fn run_experiment(
    strategies: &[Strategy],
    base_trainset: &[SkeletonClip],
    testset: &[SkeletonClip],
    gen_params: GenParams,
    train_config: &TrainConfig,
    seed_value: u64,
) -> Result<Vec<ExperimentResult>> {
    run_with_extractor(
        strategies,
        base_trainset,
        testset,
        gen_params,
        train_config,
        seed_value,
        &|clip| Ok(extract_features(clip)?),
    )
}

/// Run the depth-modality experiment: the same protocol with features
/// computed from rendered depth frames (silhouette area, centroid and
/// height statistics) instead of skeleton coordinates.
pub fn run_depth_experiment(
    strategies: &[Strategy],
    base_trainset: &[SkeletonClip],
    testset: &[SkeletonClip],
    gen_params: GenParams,
    camera: &CameraModel,
    train_config: &TrainConfig,
    seed_value: u64,
) -> Result<Vec<ExperimentResult>> {
    camera.validate()?;
    let camera = camera.clone();
    run_with_extractor(
        strategies,
        base_trainset,
        testset,
        gen_params,
        train_config,
        seed_value,
        &move |clip| {
            let frames = render_depth(clip, &camera, DEFAULT_BONE_RADIUS_M)?;
            Ok(depth_features(&frames, clip.fps)?)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{build_imbalanced_trainset, build_testset, ClassDistribution};
    use std::collections::BTreeMap;

    fn tiny_setup() -> (Vec<SkeletonClip>, Vec<SkeletonClip>, GenParams) {
        let params = GenParams { duration_s: 1.0, fps: 15.0 };
        let mut counts = BTreeMap::new();
        counts.insert(ActionLabel::Sitting, 8);
        counts.insert(ActionLabel::Walking, 4);
        counts.insert(ActionLabel::Lying, 2);
        let dist = ClassDistribution::new(counts).unwrap();
        let train = build_imbalanced_trainset(&dist, params, 11).unwrap();
        let test = build_testset(4, params, 12).unwrap();
        (train, test, params)
    }

    fn quick_config() -> TrainConfig {
        TrainConfig { epochs: 60, ..TrainConfig::default() }
    }

    #[test]
    fn experiment_is_seed_reproducible() {
        let (train, test, params) = tiny_setup();
        let strategies = [Strategy::Vanilla, Strategy::Bootstrap { factor: 1.5 }];
        let a = run_experiment(&strategies, &train, &test, params, &quick_config(), 5).unwrap();
        let b = run_experiment(&strategies, &train, &test, params, &quick_config(), 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn confusion_rows_sum_to_test_counts() {
        let (train, test, params) = tiny_setup();
        let results =
            run_experiment(&[Strategy::Vanilla], &train, &test, params, &quick_config(), 1)
                .unwrap();
        let result = &results[0];
        for (i, action) in BENCH_ACTIONS.iter().enumerate() {
            let expected = test.iter().filter(|c| c.action == *action).count();
            let row_sum: usize = result.confusion[i].iter().sum();
            assert_eq!(row_sum, expected, "{action}");
        }
    }

    #[test]
    fn class_missing_from_training_scores_zero_not_crash() {
        let (train, test, params) = tiny_setup();
        // The tiny training distribution has no standing/turning clips at
        // all; the run must still succeed and report those classes.
        let results =
            run_experiment(&[Strategy::Vanilla], &train, &test, params, &quick_config(), 2)
                .unwrap();
        let result = &results[0];
        assert_eq!(result.per_class_accuracy_pct.len(), BENCH_ACTIONS.len());
        assert_eq!(result.per_class_accuracy_pct[&ActionLabel::Turning], 0.0);
    }

    #[test]
    fn csv_layout_matches_benchmark_table() {
        let (train, test, params) = tiny_setup();
        let results =
            run_experiment(&[Strategy::Vanilla], &train, &test, params, &quick_config(), 3)
                .unwrap();
        let csv = results_to_csv(&results);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "strategy,sitting,standing,walking,turning,lying");
        assert!(lines.next().unwrap().starts_with("vanilla,"));

        let confusion_csv = results[0].confusion_to_csv();
        assert!(confusion_csv.starts_with("true_class,sitting,standing,walking,turning,lying,sit_to_stand,stand_to_sit\n"));
    }

    #[test]
    fn test_set_is_never_mutated_by_strategies() {
        let (train, test, params) = tiny_setup();
        let before = test.clone();
        for strategy in Strategy::default_ladder() {
            // Strategies only ever see the training set; verify the applied
            // output carries no test provenance tags.
            let out = match strategy {
                Strategy::SyntheticBalanced { .. } => {
                    strategy.apply(&train, GenParams { duration_s: 0.5, fps: 10.0 }, 7).unwrap()
                }
                _ => strategy.apply(&train, params, 7).unwrap(),
            };
            for clip in &out {
                assert!(
                    !clip.metadata.subject_id.starts_with("test/"),
                    "{} produced a test-tagged clip",
                    strategy.name()
                );
            }
        }
        assert_eq!(test, before);
    }
}
