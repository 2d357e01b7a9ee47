//! The four state transformation operators, candidate-set generation and
//! greedy selection.
//!
//! Candidate generators are pure functions of their inputs and the random
//! stream. They never clip; [`transform_round`] projects candidates onto the
//! box (when the bounds policy says so) right before evaluation.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::objective::Objective;
use crate::params::{BoundsPolicy, StaParams};
use crate::rng::RngStream;
use crate::state::{evaluate, BoxBounds, EvalCounter, EvaluatedState, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Rotation,
    Translation,
    Expansion,
    Axesion,
}

/// The SE states produced from one incumbent by one operator.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CandidateSet(Vec<StateVector>);

impl CandidateSet {
    pub fn new(candidates: Vec<StateVector>) -> Self {
        Self(candidates)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, StateVector> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[StateVector] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<StateVector> {
        self.0
    }

    pub fn clip(&mut self, bounds: &BoxBounds) {
        for c in &mut self.0 {
            bounds.clip_in_place(c);
        }
    }
}

impl<'a> IntoIterator for &'a CandidateSet {
    type Item = &'a StateVector;
    type IntoIter = core::slice::Iter<'a, StateVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Everything one trial needs besides its parameters: the objective, the
/// bounds policy, and the trial's private random stream and evaluation count.
#[derive(Debug)]
pub struct SearchContext<'a, O: ?Sized> {
    pub objective: &'a O,
    pub policy: BoundsPolicy,
    pub rng: RngStream,
    pub counter: EvalCounter,
}

impl<'a, O: Objective + ?Sized> SearchContext<'a, O> {
    pub fn new(objective: &'a O, policy: BoundsPolicy, seed: u64) -> Self {
        Self {
            objective,
            policy,
            rng: RngStream::new(seed),
            counter: EvalCounter::new(),
        }
    }

    pub fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        evaluate(self.objective, x, &mut self.counter)
    }

    /// Applies the bounds policy to a freshly generated candidate.
    pub fn enforce(&self, x: &mut StateVector) {
        if self.policy.clips() {
            self.objective.bounds().clip_in_place(x);
        }
    }

    fn enforce_all(&self, set: &mut CandidateSet) {
        if self.policy.clips() {
            set.clip(self.objective.bounds());
        }
    }
}

/// Rotation: `x + alpha / (n * |x|) * R x`, with a fresh `n x n` matrix `R`
/// of `U[-1, 1]` entries per candidate. Every candidate lies within distance
/// `alpha` of `x`.
///
/// At `x = 0` the step is identically zero and all candidates equal `x`.
pub fn rotate_candidates(x: &StateVector, alpha: f64, se: usize, rng: &mut RngStream) -> CandidateSet {
    let n = x.dim();
    let norm = x.norm();
    if norm == 0.0 {
        return CandidateSet((0..se).map(|_| x.clone()).collect());
    }
    let scale = alpha / (n as f64 * norm);
    let cands = (0..se)
        .map(|_| {
            let mut c = x.clone();
            for ci in c.iter_mut() {
                // One row of R per coordinate, drawn row-major.
                let row: f64 = x.iter().map(|&xj| rng.uniform_sym() * xj).sum();
                *ci += scale * row;
            }
            c
        })
        .collect();
    CandidateSet(cands)
}

/// Translation along the line from `x_old` through `x_new`, starting at
/// `x_new`: `x_new + beta * r * (x_new - x_old) / |x_new - x_old|` with
/// `r ~ U[0, 1]` per candidate.
///
/// Returns `None` when the two points coincide (no direction).
pub fn translate_candidates(
    x_new: &StateVector,
    x_old: &StateVector,
    beta: f64,
    se: usize,
    rng: &mut RngStream,
) -> Option<CandidateSet> {
    debug_assert_eq!(x_new.dim(), x_old.dim());
    let dir: Vec<f64> = x_new.iter().zip(x_old.iter()).map(|(a, b)| a - b).collect();
    let len = math::norm2(&dir);
    if len == 0.0 || !len.is_finite() {
        return None;
    }
    let cands = (0..se)
        .map(|_| {
            let step = beta * rng.uniform01() / len;
            x_new.iter().zip(&dir).map(|(xi, di)| xi + step * di).collect()
        })
        .collect();
    Some(CandidateSet(cands))
}

/// Expansion: coordinate `i` becomes `x_i * (1 + gamma * g_i)`, `g_i ~ N(0, 1)`.
pub fn expand_candidates(x: &StateVector, gamma: f64, se: usize, rng: &mut RngStream) -> CandidateSet {
    let cands = (0..se)
        .map(|_| x.iter().map(|&xi| xi + gamma * rng.standard_normal() * xi).collect())
        .collect();
    CandidateSet(cands)
}

/// Axesion: one uniformly chosen coordinate `j` becomes
/// `x_j * (1 + delta * g)`, `g ~ N(0, 1)`; the rest are copied.
pub fn axes_candidates(x: &StateVector, delta: f64, se: usize, rng: &mut RngStream) -> CandidateSet {
    let n = x.dim();
    let cands = (0..se)
        .map(|_| {
            let mut c = x.clone();
            if n > 0 {
                let j = rng.index(n);
                c[j] += delta * rng.standard_normal() * x[j];
            }
            c
        })
        .collect();
    CandidateSet(cands)
}

/// Evaluates every candidate and adopts the best one only if it is strictly
/// better than the incumbent. Ties among candidates go to the lowest index.
pub fn greedy_select<O: Objective + ?Sized>(
    obj: &O,
    incumbent: EvaluatedState,
    cands: &CandidateSet,
    counter: &mut EvalCounter,
) -> Result<(EvaluatedState, bool)> {
    if cands.is_empty() {
        return Err(Error::Empty("candidate set"));
    }
    let mut best: Option<(usize, f64)> = None;
    for (i, c) in cands.iter().enumerate() {
        let f = evaluate(obj, c, counter)?;
        if best.is_none_or(|(_, bf)| f < bf) {
            best = Some((i, f));
        }
    }
    let (i, f) = best.expect("non-empty");
    if f < incumbent.fitness {
        Ok((EvaluatedState::new(cands.0[i].clone(), f), true))
    } else {
        Ok((incumbent, false))
    }
}

/// One operator application with greedy selection, followed by a translation
/// round along the improving direction whenever the first selection improved.
///
/// Consumes exactly `se` evaluations, or `2 * se` when the incumbent improved.
pub fn transform_round<O: Objective + ?Sized>(
    ctx: &mut SearchContext<'_, O>,
    best: EvaluatedState,
    kind: OperatorKind,
    params: &StaParams,
    alpha: f64,
) -> Result<EvaluatedState> {
    let (next, _) = transform_round_reported(ctx, best, kind, params, alpha)?;
    Ok(next)
}

/// [`transform_round`] that also reports whether the first selection improved.
pub(crate) fn transform_round_reported<O: Objective + ?Sized>(
    ctx: &mut SearchContext<'_, O>,
    best: EvaluatedState,
    kind: OperatorKind,
    params: &StaParams,
    alpha: f64,
) -> Result<(EvaluatedState, bool)> {
    let se = params.se;
    let mut cands = match kind {
        OperatorKind::Rotation => rotate_candidates(&best.state, alpha, se, &mut ctx.rng),
        OperatorKind::Expansion => expand_candidates(&best.state, params.gamma, se, &mut ctx.rng),
        OperatorKind::Axesion => axes_candidates(&best.state, params.delta, se, &mut ctx.rng),
        OperatorKind::Translation => {
            return Err(Error::param(
                "kind",
                "translation only runs inside another operator's round",
            ))
        }
    };
    ctx.enforce_all(&mut cands);
    let old_state = best.state.clone();
    let (next, improved) = greedy_select(ctx.objective, best, &cands, &mut ctx.counter)?;
    if !improved {
        return Ok((next, false));
    }
    match translate_candidates(&next.state, &old_state, params.beta, se, &mut ctx.rng) {
        Some(mut line) => {
            ctx.enforce_all(&mut line);
            let (next, _) = greedy_select(ctx.objective, next, &line, &mut ctx.counter)?;
            Ok((next, true))
        }
        None => Ok((next, true)),
    }
}
