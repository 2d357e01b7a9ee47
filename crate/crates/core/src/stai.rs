//! The individual-based engine: one incumbent improved by expansion,
//! rotation and axesion rounds under a geometrically decaying rotation factor.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::operators::{transform_round_reported, OperatorKind, SearchContext};
use crate::params::{BoundsPolicy, StaParams};
use crate::state::{sample_uniform_in_bounds, EvaluatedState, RunRecord};

/// Order of the self-learning rounds within one iteration.
pub const ROUND_ORDER: [OperatorKind; 3] =
    [OperatorKind::Expansion, OperatorKind::Rotation, OperatorKind::Axesion];

/// One decay step of the rotation factor.
pub fn alpha_next(alpha: f64, params: &StaParams) -> f64 {
    alpha / params.fc
}

/// Rotation-factor state across iterations.
///
/// [`AlphaSchedule::begin_iteration`] applies the reset check and returns the
/// factor to use; [`AlphaSchedule::end_iteration`] applies the decay.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaSchedule {
    current: f64,
    params: StaParams,
}

impl AlphaSchedule {
    pub fn new(params: &StaParams) -> Self {
        Self {
            current: params.alpha,
            params: *params,
        }
    }

    pub fn current(&self) -> f64 {
        self.current
    }

    pub fn begin_iteration(&mut self) -> f64 {
        if self.current < self.params.alpha_min {
            self.current = self.params.alpha_max;
        }
        self.current
    }

    pub fn end_iteration(&mut self) {
        self.current = alpha_next(self.current, &self.params);
    }
}

/// What one outer iteration did.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationReport {
    pub alpha: f64,
    /// Whether each round (in [`ROUND_ORDER`]) improved before its
    /// translation step.
    pub improved: [bool; 3],
    pub evaluations: u64,
}

/// Applies the three self-learning rounds to one incumbent.
pub(crate) fn self_learn<O: Objective + ?Sized>(
    ctx: &mut SearchContext<'_, O>,
    mut best: EvaluatedState,
    params: &StaParams,
    alpha: f64,
) -> Result<(EvaluatedState, [bool; 3])> {
    let mut improved = [false; 3];
    for (flag, kind) in improved.iter_mut().zip(ROUND_ORDER) {
        let (next, up) = transform_round_reported(ctx, best, kind, params, alpha)?;
        best = next;
        *flag = up;
    }
    Ok((best, improved))
}

/// A running individual-engine search.
#[derive(Debug)]
pub struct StaI<'a, O: ?Sized> {
    ctx: SearchContext<'a, O>,
    params: StaParams,
    schedule: AlphaSchedule,
    best: EvaluatedState,
    history: Vec<f64>,
}

impl<'a, O: Objective + ?Sized> StaI<'a, O> {
    /// Validates `params`, draws the initial state uniformly in the box and
    /// evaluates it.
    pub fn new(objective: &'a O, params: StaParams, seed: u64, policy: BoundsPolicy) -> Result<Self> {
        params.validate()?;
        let mut ctx = SearchContext::new(objective, policy, seed);
        let x0 = sample_uniform_in_bounds(objective.bounds(), &mut ctx.rng);
        let f0 = ctx.evaluate(&x0)?;
        Ok(Self {
            ctx,
            schedule: AlphaSchedule::new(&params),
            params,
            best: EvaluatedState::new(x0, f0),
            history: Vec::new(),
        })
    }

    pub fn best(&self) -> &EvaluatedState {
        &self.best
    }

    pub fn history(&self) -> &[f64] {
        &self.history
    }

    pub fn evaluations(&self) -> u64 {
        self.ctx.counter.count()
    }

    pub fn alpha(&self) -> f64 {
        self.schedule.current()
    }

    /// One outer iteration.
    pub fn step(&mut self) -> Result<IterationReport> {
        let before = self.ctx.counter.count();
        let alpha = self.schedule.begin_iteration();
        let (best, improved) = self_learn(&mut self.ctx, self.best.clone(), &self.params, alpha)?;
        self.best = best;
        self.history.push(self.best.fitness);
        self.schedule.end_iteration();
        Ok(IterationReport {
            alpha,
            improved,
            evaluations: self.ctx.counter.count() - before,
        })
    }

    pub fn into_record(self) -> RunRecord {
        RunRecord {
            evaluations: self.ctx.counter.count(),
            best: self.best,
            history: self.history,
        }
    }
}

/// Runs the individual engine for `max_iters` outer iterations.
pub fn sta1_run<O: Objective + ?Sized>(
    objective: &O,
    params: &StaParams,
    max_iters: usize,
    seed: u64,
    policy: BoundsPolicy,
) -> Result<RunRecord> {
    if max_iters == 0 {
        return Err(Error::param("max_iters", "must be at least 1"));
    }
    let mut run = StaI::new(objective, *params, seed, policy)?;
    for _ in 0..max_iters {
        run.step()?;
    }
    Ok(run.into_record())
}
