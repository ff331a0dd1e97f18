//! Derivative-free profile fitting against target motion metrics.
//!
//! The objective — metric loss between the target profile and the metrics
//! of a clip generated from candidate parameters — is a black box through
//! clip generation, so the search is a Nelder–Mead simplex with the
//! standard coefficients (reflection 1, expansion 2, contraction 0.5,
//! shrink 0.5), box-constrained by clamping candidates into the bounds
//! table. The generation seed is fixed across evaluations, which makes the
//! objective deterministic and smooth in the parameters.

use synact_metrics::{metric_profile, MetricProfile};
use synact_skeleton::ActionLabel;

use crate::config::default_table;
use crate::error::{Result, SynthError};
use crate::generate::{generate_clip, GenerationRequest};
use crate::loss::metric_loss;
use crate::profile::{ConditionProfile, ProfileParam};

/// Default curriculum: simple postures first, transitions last.
pub const DEFAULT_CURRICULUM: [ActionLabel; 5] = [
    ActionLabel::Sitting,
    ActionLabel::Standing,
    ActionLabel::Walking,
    ActionLabel::Turning,
    ActionLabel::SitToStand,
];

/// Knobs for one fit run.
#[derive(Debug, Clone)]
pub struct FitOptions {
    /// Maximum number of objective evaluations.
    pub budget: usize,
    /// Generation seed held fixed across evaluations.
    pub seed: u64,
    pub duration_s: f64,
    pub fps: f64,
    /// Initial simplex step as a fraction of each parameter's bound range.
    pub init_step: f64,
}

impl Default for FitOptions {
    fn default() -> FitOptions {
        FitOptions { budget: 400, seed: 1, duration_s: 3.0, fps: 30.0, init_step: 0.10 }
    }
}

/// Outcome of a fit: the best profile found, its loss, and the best-so-far
/// loss after every evaluation (non-increasing by construction).
#[derive(Debug, Clone)]
pub struct FitResult {
    pub profile: ConditionProfile,
    pub best_loss: f64,
    pub trace: Vec<f64>,
    pub evaluations: usize,
}

/// Parameters the template for `action` actually responds to; the rest stay
/// at their initial values.
pub fn active_params(action: ActionLabel) -> &'static [ProfileParam] {
    use ProfileParam::*;
    match action {
        ActionLabel::Walking => {
            &[GaitCadenceHz, StrideLengthM, WalkSpeedMps, StoopAngleDeg, ArmSwingAmpDeg, SpeedJitter]
        }
        ActionLabel::SitToStand | ActionLabel::StandToSit => {
            &[StoopAngleDeg, StandupOscillationAmpM, SpeedJitter]
        }
        ActionLabel::Turning => &[TurnRateDps, StoopAngleDeg, SpeedJitter],
        ActionLabel::Sitting | ActionLabel::Standing | ActionLabel::Lying => {
            &[StoopAngleDeg, SpeedJitter]
        }
    }
}

struct Objective<'a> {
    target: &'a MetricProfile,
    action: ActionLabel,
    base: ConditionProfile,
    params: &'static [ProfileParam],
    options: &'a FitOptions,
}

impl Objective<'_> {
    fn clamp(&self, x: &mut [f64]) {
        let bounds = &default_table().bounds;
        for (value, param) in x.iter_mut().zip(self.params.iter()) {
            let (lo, hi) = param.bounds(bounds);
            *value = value.clamp(lo, hi);
        }
    }

    fn profile_for(&self, x: &[f64]) -> ConditionProfile {
        let mut profile = self.base.clone();
        for (value, param) in x.iter().zip(self.params.iter()) {
            param.set(&mut profile, *value);
        }
        profile
    }

    fn eval(&self, x: &[f64]) -> Result<f64> {
        let request = GenerationRequest {
            action: self.action,
            profile: self.profile_for(x),
            duration_s: self.options.duration_s,
            fps: self.options.fps,
            viewpoint_deg: 0.0,
            seed: self.options.seed,
        };
        let clip = generate_clip(&request)?;
        Ok(metric_loss(self.target, &metric_profile(&clip)?)?.value)
    }
}

/// Fit profile parameters so generated clips reproduce `target`'s motion
/// metrics, starting from `init`. Returns the best profile within budget;
/// exhausting the budget is not an error.
pub fn fit_profile(
    target: &MetricProfile,
    action: ActionLabel,
    init: &ConditionProfile,
    options: &FitOptions,
) -> Result<FitResult> {
    if options.budget == 0 {
        return Err(SynthError::ZeroBudget);
    }
    let table = default_table();
    init.validate(&table.bounds)?;

    let params = active_params(action);
    let objective =
        Objective { target, action, base: init.clone(), params, options };

    let n = params.len();
    let mut evaluations = 0usize;
    let mut trace: Vec<f64> = Vec::with_capacity(options.budget);
    let mut best_x: Vec<f64> = params.iter().map(|p| p.get(init)).collect();
    let mut best_f = f64::INFINITY;

    // Wraps the raw objective with budget accounting and best-so-far
    // tracking; returns None once the budget is spent.
    let budgeted_eval = |x: &[f64],
                             evaluations: &mut usize,
                             trace: &mut Vec<f64>,
                             best_x: &mut Vec<f64>,
                             best_f: &mut f64|
     -> Result<Option<f64>> {
        if *evaluations >= options.budget {
            return Ok(None);
        }
        let f = objective.eval(x)?;
        *evaluations += 1;
        if f < *best_f {
            *best_f = f;
            best_x.clone_from_slice(x);
        }
        trace.push(*best_f);
        Ok(Some(f))
    };

    macro_rules! eval_or_break {
        ($x:expr) => {
            match budgeted_eval($x, &mut evaluations, &mut trace, &mut best_x, &mut best_f)? {
                Some(f) => f,
                None => break,
            }
        };
    }

    // The first evaluation is always the init point, so a budget of 1
    // returns the init evaluation.
    let x0: Vec<f64> = params.iter().map(|p| p.get(init)).collect();
    budgeted_eval(&x0, &mut evaluations, &mut trace, &mut best_x, &mut best_f)?;

    let centroid = |simplex: &[(Vec<f64>, f64)]| -> Vec<f64> {
        let mut c = vec![0.0; n];
        for (x, _) in &simplex[..simplex.len() - 1] {
            for (ci, xi) in c.iter_mut().zip(x.iter()) {
                *ci += xi;
            }
        }
        for ci in c.iter_mut() {
            *ci /= (simplex.len() - 1) as f64;
        }
        c
    };

    // Restarted Nelder–Mead: whenever the simplex collapses with budget
    // left, rebuild it around the incumbent best with a smaller step
    // (cycling back to the full step once the scale bottoms out).
    let mut step_scale = options.init_step;
    'outer: while evaluations < options.budget {
        // Build a simplex around the incumbent best point.
        let anchor = best_x.clone();
        let f_anchor = best_f;
        let mut simplex: Vec<(Vec<f64>, f64)> = vec![(anchor.clone(), f_anchor)];
        for i in 0..n {
            let (lo, hi) = params[i].bounds(&table.bounds);
            let step = step_scale * (hi - lo);
            let mut xi = anchor.clone();
            // Step toward the side with more room.
            xi[i] = if hi - xi[i] >= xi[i] - lo { xi[i] + step } else { xi[i] - step };
            objective.clamp(&mut xi);
            let fi = match budgeted_eval(&xi, &mut evaluations, &mut trace, &mut best_x, &mut best_f)? {
                Some(f) => f,
                None => break 'outer,
            };
            simplex.push((xi, fi));
        }

        loop {
            if evaluations >= options.budget {
                break 'outer;
            }
            simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
            let f_best = simplex[0].1;
            let f_worst = simplex[n].1;
            if (f_worst - f_best).abs() <= 1e-12 * (1.0 + f_best.abs()) {
                // Converged: restart around the best with a finer simplex.
                step_scale *= 0.35;
                if step_scale < 1e-3 {
                    step_scale = options.init_step;
                }
                continue 'outer;
            }

            let c = centroid(&simplex);
            let worst = simplex[n].0.clone();
            let mut reflected: Vec<f64> =
                c.iter().zip(worst.iter()).map(|(ci, wi)| ci + (ci - wi)).collect();
            objective.clamp(&mut reflected);
            let f_reflected = eval_or_break!(&reflected);

            if f_reflected < simplex[0].1 {
                // Try expanding past the reflection.
                let mut expanded: Vec<f64> =
                    c.iter().zip(worst.iter()).map(|(ci, wi)| ci + 2.0 * (ci - wi)).collect();
                objective.clamp(&mut expanded);
                let f_expanded = eval_or_break!(&expanded);
                simplex[n] = if f_expanded < f_reflected {
                    (expanded, f_expanded)
                } else {
                    (reflected, f_reflected)
                };
            } else if f_reflected < simplex[n - 1].1 {
                simplex[n] = (reflected, f_reflected);
            } else {
                // Contract toward the centroid, inside or outside.
                let toward = if f_reflected < simplex[n].1 { &reflected } else { &worst };
                let mut contracted: Vec<f64> =
                    c.iter().zip(toward.iter()).map(|(ci, ti)| ci + 0.5 * (ti - ci)).collect();
                objective.clamp(&mut contracted);
                let f_contracted = eval_or_break!(&contracted);
                if f_contracted < simplex[n].1.min(f_reflected) {
                    simplex[n] = (contracted, f_contracted);
                } else {
                    // Shrink everything toward the current best vertex.
                    let anchor = simplex[0].0.clone();
                    for vertex in simplex.iter_mut().skip(1) {
                        let mut xs: Vec<f64> = anchor
                            .iter()
                            .zip(vertex.0.iter())
                            .map(|(ai, vi)| ai + 0.5 * (vi - ai))
                            .collect();
                        objective.clamp(&mut xs);
                        match budgeted_eval(&xs, &mut evaluations, &mut trace, &mut best_x, &mut best_f)? {
                            Some(f) => *vertex = (xs, f),
                            None => break 'outer,
                        }
                    }
                }
            }
        }
    }

    let profile = objective.profile_for(&best_x).clamped(&table.bounds);
    Ok(FitResult { profile, best_loss: best_f, trace, evaluations })
}

/// Fit one profile per action in curriculum order, warm-starting each fit
/// from the previously fitted profile.
pub fn curriculum_fit(
    targets: &[(ActionLabel, MetricProfile)],
    order: &[ActionLabel],
    init: &ConditionProfile,
    options: &FitOptions,
) -> Result<Vec<(ActionLabel, FitResult)>> {
    let mut current = init.clone();
    let mut results = Vec::with_capacity(order.len());
    for action in order {
        let target = targets
            .iter()
            .find(|(a, _)| a == action)
            .map(|(_, t)| t)
            .ok_or(SynthError::MissingTarget(*action))?;
        let result = fit_profile(target, *action, &current, options)?;
        current = result.profile.clone();
        results.push((*action, result));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_clip, GenerationRequest};
    use crate::profile::default_profile;
    use synact_skeleton::Condition;

    fn walking_target(profile: &ConditionProfile, options: &FitOptions) -> MetricProfile {
        let clip = generate_clip(&GenerationRequest {
            action: ActionLabel::Walking,
            profile: profile.clone(),
            duration_s: options.duration_s,
            fps: options.fps,
            viewpoint_deg: 0.0,
            seed: options.seed,
        })
        .unwrap();
        metric_profile(&clip).unwrap()
    }

    fn perturbed(profile: &ConditionProfile, factor: f64) -> ConditionProfile {
        let mut p = profile.clone();
        p.walk_speed_mps *= factor;
        p.gait_cadence_hz *= 2.0 - factor;
        p.stoop_angle_deg += 3.0;
        p.stride_length_m *= factor;
        p.clamped(&default_table().bounds)
    }

    #[test]
    fn budget_one_returns_the_init_evaluation() {
        let truth = default_profile(Condition::Ad, None).unwrap();
        let options = FitOptions { budget: 1, ..FitOptions::default() };
        let target = walking_target(&truth, &options);
        let init = perturbed(&truth, 1.05);
        let result = fit_profile(&target, ActionLabel::Walking, &init, &options).unwrap();
        assert_eq!(result.evaluations, 1);
        assert_eq!(result.trace.len(), 1);
        assert_eq!(result.profile, init);
    }

    #[test]
    fn trace_is_monotone_non_increasing_and_run_is_deterministic() {
        let truth = default_profile(Condition::Mci, None).unwrap();
        let options = FitOptions { budget: 60, ..FitOptions::default() };
        let target = walking_target(&truth, &options);
        let init = perturbed(&truth, 1.1);
        let result = fit_profile(&target, ActionLabel::Walking, &init, &options).unwrap();
        assert_eq!(result.trace.len(), result.evaluations);
        for w in result.trace.windows(2) {
            assert!(w[1] <= w[0]);
        }
        let again = fit_profile(&target, ActionLabel::Walking, &init, &options).unwrap();
        assert_eq!(again.profile, result.profile);
        assert_eq!(again.trace, result.trace);
    }

    #[test]
    fn self_recovery_reaches_small_loss() {
        let truth = default_profile(Condition::Ad, None).unwrap();
        let options = FitOptions { budget: 600, ..FitOptions::default() };
        let target = walking_target(&truth, &options);
        let init = perturbed(&truth, 1.08);
        let result = fit_profile(&target, ActionLabel::Walking, &init, &options).unwrap();
        assert!(
            result.best_loss < 1e-2,
            "loss {} after {} evaluations",
            result.best_loss,
            result.evaluations
        );
    }

    #[test]
    fn fitted_profile_stays_in_bounds() {
        let truth = default_profile(Condition::Ad, None).unwrap();
        let options = FitOptions { budget: 120, ..FitOptions::default() };
        let target = walking_target(&truth, &options);
        let mut init = truth.clone();
        // Start on the boundary so reflections push against it.
        init.walk_speed_mps = default_table().bounds.walk_speed_mps.1;
        let result = fit_profile(&target, ActionLabel::Walking, &init, &options).unwrap();
        assert!(result.profile.validate(&default_table().bounds).is_ok());
    }

    #[test]
    fn single_action_curriculum_equals_fit_profile() {
        let truth = default_profile(Condition::Nc, None).unwrap();
        let options = FitOptions { budget: 40, ..FitOptions::default() };
        let target = walking_target(&truth, &options);
        let init = perturbed(&truth, 0.95);

        let direct = fit_profile(&target, ActionLabel::Walking, &init, &options).unwrap();
        let via_curriculum = curriculum_fit(
            &[(ActionLabel::Walking, target.clone())],
            &[ActionLabel::Walking],
            &init,
            &options,
        )
        .unwrap();
        assert_eq!(via_curriculum.len(), 1);
        assert_eq!(via_curriculum[0].1.profile, direct.profile);
        assert_eq!(via_curriculum[0].1.trace, direct.trace);
    }

    #[test]
    fn missing_target_is_an_error() {
        let init = default_profile(Condition::Nc, None).unwrap();
        let err = curriculum_fit(&[], &[ActionLabel::Sitting], &init, &FitOptions::default());
        assert!(matches!(err, Err(SynthError::MissingTarget(ActionLabel::Sitting))));
    }

    #[test]
    fn default_curriculum_order_is_documented() {
        assert_eq!(
            DEFAULT_CURRICULUM,
            [
                ActionLabel::Sitting,
                ActionLabel::Standing,
                ActionLabel::Walking,
                ActionLabel::Turning,
                ActionLabel::SitToStand,
            ]
        );
    }
}
