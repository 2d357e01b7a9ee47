//! Multi-trial experiment execution.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use sta_core::baseline::random_optimization_run;
use sta_core::stai::sta1_run;
use sta_core::staii::sta2_run;
use sta_core::stats::{average_fitness_curve, summarize, SummaryStats};
use sta_core::{trial_seed, RunRecord, StateVector};

use crate::config::{Algorithm, ExperimentConfig};
use crate::error::HarnessError;

/// Outcome of one independent trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub index: usize,
    pub seed: u64,
    pub best_state: StateVector,
    pub final_fitness: f64,
    /// Best fitness after each outer iteration; length equals `max_iters`.
    pub history: Vec<f64>,
    pub evaluations: u64,
    pub wall_time: Duration,
}

impl TrialRecord {
    pub fn is_finite(&self) -> bool {
        self.final_fitness.is_finite()
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    /// Ordered by trial index.
    pub trials: Vec<TrialRecord>,
    /// Statistics over the trials with a finite final fitness.
    pub stats: SummaryStats,
    /// Indices of trials whose final fitness was not finite.
    pub flagged: Vec<usize>,
}

impl ExperimentResult {
    pub fn finals(&self) -> Vec<f64> {
        self.trials.iter().map(|t| t.final_fitness).collect()
    }

    /// Mean of the per-trial evaluation counts.
    pub fn evals_mean(&self) -> f64 {
        let total: u64 = self.trials.iter().map(|t| t.evaluations).sum();
        total as f64 / self.trials.len() as f64
    }

    /// Per-iteration average of the best-so-far fitness across trials.
    pub fn average_curve(&self) -> Vec<f64> {
        average_fitness_curve(self.trials.iter().map(|t| t.history.as_slice()))
            .expect("trial histories share the configured length")
    }
}

/// Per-iteration mean of the trial histories.
pub fn average_fitness_of(records: &[TrialRecord]) -> Result<Vec<f64>, HarnessError> {
    Ok(average_fitness_curve(records.iter().map(|t| t.history.as_slice()))?)
}

fn run_trial(cfg: &ExperimentConfig, index: usize) -> Result<TrialRecord, HarnessError> {
    let objective = cfg.benchmark()?;
    let seed = trial_seed(cfg.base_seed, index);
    let start = Instant::now();
    let record: RunRecord = match cfg.algorithm {
        Algorithm::Sta1 => sta1_run(&objective, &cfg.params, cfg.max_iters, seed, cfg.bounds)?,
        Algorithm::Sta2 => sta2_run(&objective, &cfg.staii_config(), cfg.max_iters, seed, cfg.bounds)?,
        Algorithm::Ro => random_optimization_run(&objective, cfg.max_iters, cfg.step_sigma, seed, cfg.bounds)?,
    };
    Ok(TrialRecord {
        index,
        seed,
        final_fitness: record.best.fitness,
        best_state: record.best.state,
        history: record.history,
        evaluations: record.evaluations,
        wall_time: start.elapsed(),
    })
}

/// Runs `cfg.trials` independent trials (trial `k` seeded with
/// `base_seed + k`) and summarizes their final fitnesses.
///
/// Trials run in parallel; results are ordered by trial index regardless of
/// completion order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult, HarnessError> {
    cfg.validate()?;
    let trials: Vec<TrialRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect::<Result<_, _>>()?;
    let flagged: Vec<usize> = trials.iter().filter(|t| !t.is_finite()).map(|t| t.index).collect();
    let finite: Vec<f64> = trials.iter().filter(|t| t.is_finite()).map(|t| t.final_fitness).collect();
    if finite.is_empty() {
        return Err(HarnessError::AllTrialsNonFinite(trials.len()));
    }
    let stats = summarize(&finite)?;
    Ok(ExperimentResult {
        config: cfg.clone(),
        trials,
        stats,
        flagged,
    })
}
