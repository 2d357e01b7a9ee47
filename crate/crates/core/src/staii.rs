//! The population engine: `sn` states self-learn independently and exchange
//! information by crossover every `cf` iterations.

use alloc::vec::Vec;

use crate::crossover::CrossoverKind;
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::operators::SearchContext;
use crate::params::{BoundsPolicy, StaParams};
use crate::stai::{self_learn, AlphaSchedule};
use crate::state::{sample_uniform_in_bounds, EvaluatedState, RunRecord};

/// Settings of the population engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaIIConfig {
    pub params: StaParams,
    /// Number of states.
    pub sn: usize,
    /// Communication frequency: exchange happens when `iter % cf == 0`.
    pub cf: usize,
    pub crossover: CrossoverKind,
}

impl Default for StaIIConfig {
    /// SN 30, SE 10, CF 50, proposed crossover.
    fn default() -> Self {
        Self {
            params: StaParams::population_default(),
            sn: 30,
            cf: 50,
            crossover: CrossoverKind::Proposed,
        }
    }
}

impl StaIIConfig {
    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.sn == 0 {
            return Err(Error::param("sn", "must be at least 1"));
        }
        if self.cf == 0 {
            return Err(Error::param("cf", "must be at least 1"));
        }
        self.crossover.validate()
    }
}

/// The evaluated states of the population, in a stable order.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub states: Vec<EvaluatedState>,
}

impl Population {
    pub fn new(states: Vec<EvaluatedState>) -> Self {
        Self { states }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Best member; ties go to the earliest.
    pub fn best(&self) -> Option<&EvaluatedState> {
        self.states
            .iter()
            .reduce(|best, s| if s.fitness < best.fitness { s } else { best })
    }
}

/// Crosses every unordered pair `(i, j)`, `i < j`, evaluates all offspring and
/// keeps the `sn` best of parents followed by offspring (stable on ties).
///
/// With fewer than two states there is nothing to exchange.
pub fn communicate<O: Objective + ?Sized>(
    ctx: &mut SearchContext<'_, O>,
    pop: Population,
    kind: CrossoverKind,
) -> Result<Population> {
    let sn = pop.len();
    if sn < 2 {
        return Ok(pop);
    }
    let mut pool = pop.states;
    pool.reserve(kind.offspring_per_pair() * sn * (sn - 1) / 2);
    for i in 0..sn {
        for j in (i + 1)..sn {
            for mut child in kind.offspring(&pool[i].state, &pool[j].state, &mut ctx.rng)? {
                ctx.enforce(&mut child);
                let f = ctx.evaluate(&child)?;
                pool.push(EvaluatedState::new(child, f));
            }
        }
    }
    pool.sort_by(|a, b| a.fitness.total_cmp(&b.fitness));
    pool.truncate(sn);
    Ok(Population::new(pool))
}

/// A running population-engine search.
#[derive(Debug)]
pub struct StaII<'a, O: ?Sized> {
    ctx: SearchContext<'a, O>,
    config: StaIIConfig,
    schedule: AlphaSchedule,
    population: Population,
    iter: usize,
    history: Vec<f64>,
}

impl<'a, O: Objective + ?Sized> StaII<'a, O> {
    pub fn new(objective: &'a O, config: StaIIConfig, seed: u64, policy: BoundsPolicy) -> Result<Self> {
        config.validate()?;
        let mut ctx = SearchContext::new(objective, policy, seed);
        let mut states = Vec::with_capacity(config.sn);
        for _ in 0..config.sn {
            let x = sample_uniform_in_bounds(objective.bounds(), &mut ctx.rng);
            let f = ctx.evaluate(&x)?;
            states.push(EvaluatedState::new(x, f));
        }
        Ok(Self {
            ctx,
            schedule: AlphaSchedule::new(&config.params),
            config,
            population: Population::new(states),
            iter: 0,
            history: Vec::new(),
        })
    }

    pub fn population(&self) -> &Population {
        &self.population
    }

    pub fn best(&self) -> &EvaluatedState {
        self.population.best().expect("population is never empty")
    }

    pub fn history(&self) -> &[f64] {
        &self.history
    }

    pub fn evaluations(&self) -> u64 {
        self.ctx.counter.count()
    }

    /// One outer iteration: self-learning of every state under the shared
    /// rotation factor, decay, then exchange when the iteration index is a
    /// multiple of `cf`. Returns whether an exchange took place.
    pub fn step(&mut self) -> Result<bool> {
        self.iter += 1;
        let alpha = self.schedule.begin_iteration();
        let states = core::mem::take(&mut self.population.states);
        let mut learned = Vec::with_capacity(states.len());
        for s in states {
            let (next, _) = self_learn(&mut self.ctx, s, &self.config.params, alpha)?;
            learned.push(next);
        }
        self.population.states = learned;
        self.schedule.end_iteration();
        let exchanged = self.iter.is_multiple_of(self.config.cf);
        if exchanged {
            let pop = core::mem::replace(&mut self.population, Population::new(Vec::new()));
            self.population = communicate(&mut self.ctx, pop, self.config.crossover)?;
        }
        self.history.push(self.best().fitness);
        Ok(exchanged)
    }

    pub fn into_record(self) -> RunRecord {
        let best = self.best().clone();
        RunRecord {
            best,
            history: self.history,
            evaluations: self.ctx.counter.count(),
        }
    }
}

/// Runs the population engine for `max_iters` outer iterations.
pub fn sta2_run<O: Objective + ?Sized>(
    objective: &O,
    config: &StaIIConfig,
    max_iters: usize,
    seed: u64,
    policy: BoundsPolicy,
) -> Result<RunRecord> {
    if max_iters == 0 {
        return Err(Error::param("max_iters", "must be at least 1"));
    }
    let mut run = StaII::new(objective, *config, seed, policy)?;
    for _ in 0..max_iters {
        run.step()?;
    }
    Ok(run.into_record())
}
