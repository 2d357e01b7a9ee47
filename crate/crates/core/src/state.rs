use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Deref, DerefMut};

use crate::error::{Error, Result};
use crate::math;
use crate::objective::Objective;
use crate::rng::RngStream;

/// A candidate solution (a "state") in `R^n`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StateVector(Vec<f64>);

impl StateVector {
    pub fn new(coords: Vec<f64>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        math::norm2(&self.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl Deref for StateVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl DerefMut for StateVector {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }
}

impl From<Vec<f64>> for StateVector {
    fn from(v: Vec<f64>) -> Self {
        Self(v)
    }
}

impl From<&[f64]> for StateVector {
    fn from(v: &[f64]) -> Self {
        Self(v.to_vec())
    }
}

impl FromIterator<f64> for StateVector {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// A state together with the objective value it was evaluated to.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluatedState {
    pub state: StateVector,
    pub fitness: f64,
}

impl EvaluatedState {
    pub fn new(state: StateVector, fitness: f64) -> Self {
        Self { state, fitness }
    }
}

/// Axis-aligned search box, `lower[i] < upper[i]` in every coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxBounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BoxBounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidBounds("dimension must be at least 1"));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        for (lo, hi) in lower.iter().zip(&upper) {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidBounds("bounds must be finite"));
            }
            if lo >= hi {
                return Err(Error::InvalidBounds("lower must be strictly below upper"));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval `[lo, hi]` replicated over `dim` coordinates.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Projects `x` into the box in place. `x` must have the box's dimension.
    pub(crate) fn clip_in_place(&self, x: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim());
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }
}

/// Number of objective evaluations performed so far.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct EvalCounter(u64);

impl EvalCounter {
    pub fn new() -> Self {
        Self(0)
    }

    pub fn count(&self) -> u64 {
        self.0
    }

    fn bump(&mut self) {
        self.0 += 1;
    }
}

/// Evaluates `obj` at `x` and counts the call.
///
/// Non-finite objective values come back as `+inf` so that greedy selection
/// never adopts them.
pub fn evaluate<O: Objective + ?Sized>(
    obj: &O,
    x: &[f64],
    counter: &mut EvalCounter,
) -> Result<f64> {
    if x.len() != obj.dim() {
        return Err(Error::DimensionMismatch {
            expected: obj.dim(),
            got: x.len(),
        });
    }
    let y = obj.value(x);
    counter.bump();
    Ok(if y.is_finite() { y } else { f64::INFINITY })
}

/// Componentwise projection of `x` onto `bounds`.
pub fn clip_to_bounds(x: &StateVector, bounds: &BoxBounds) -> Result<StateVector> {
    if x.dim() != bounds.dim() {
        return Err(Error::DimensionMismatch {
            expected: bounds.dim(),
            got: x.dim(),
        });
    }
    let mut out = x.clone();
    bounds.clip_in_place(&mut out);
    Ok(out)
}

/// Draws each coordinate independently and uniformly from its interval.
pub fn sample_uniform_in_bounds(bounds: &BoxBounds, rng: &mut RngStream) -> StateVector {
    bounds
        .lower
        .iter()
        .zip(&bounds.upper)
        .map(|(&lo, &hi)| rng.uniform_in(lo, hi))
        .collect()
}

/// Outcome of one optimization run, shared by every engine in this crate.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub best: EvaluatedState,
    /// Best fitness after each completed outer iteration.
    pub history: Vec<f64>,
    pub evaluations: u64,
}
