//! Basic random optimization: Gaussian perturbation with greedy acceptance.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::operators::SearchContext;
use crate::params::BoundsPolicy;
use crate::state::{sample_uniform_in_bounds, EvaluatedState, RunRecord, StateVector};

pub const DEFAULT_STEP_SIGMA: f64 = 1.0;

/// Runs `max_iters` perturbation trials from a uniform start. Each trial adds
/// i.i.d. `N(0, step_sigma^2)` noise and is accepted only on strict
/// improvement. Uses exactly `max_iters + 1` evaluations.
pub fn random_optimization_run<O: Objective + ?Sized>(
    objective: &O,
    max_iters: usize,
    step_sigma: f64,
    seed: u64,
    policy: BoundsPolicy,
) -> Result<RunRecord> {
    if max_iters == 0 {
        return Err(Error::param("max_iters", "must be at least 1"));
    }
    if !(step_sigma.is_finite() && step_sigma > 0.0) {
        return Err(Error::param("step_sigma", "must be positive and finite"));
    }
    let mut ctx = SearchContext::new(objective, policy, seed);
    let x0 = sample_uniform_in_bounds(objective.bounds(), &mut ctx.rng);
    let f0 = ctx.evaluate(&x0)?;
    let mut best = EvaluatedState::new(x0, f0);
    let mut history = Vec::with_capacity(max_iters);
    for _ in 0..max_iters {
        let mut trial: StateVector = best
            .state
            .iter()
            .map(|&xi| xi + step_sigma * ctx.rng.standard_normal())
            .collect();
        ctx.enforce(&mut trial);
        let f = ctx.evaluate(&trial)?;
        if f < best.fitness {
            best = EvaluatedState::new(trial, f);
        }
        history.push(best.fitness);
    }
    Ok(RunRecord {
        best,
        history,
        evaluations: ctx.counter.count(),
    })
}
