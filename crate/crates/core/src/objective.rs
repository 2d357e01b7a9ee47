//! The minimization target abstraction.

use crate::state::BoxBounds;

/// A deterministic function `R^n -> R` with a search box.
///
/// Implementations must be pure: the same input always yields the same
/// value. Engines rely on that for reproducibility.
pub trait Objective {
    fn name(&self) -> &str;

    fn bounds(&self) -> &BoxBounds;

    fn value(&self, x: &[f64]) -> f64;

    fn dim(&self) -> usize {
        self.bounds().dim()
    }

    /// Known global minimum value, when there is one.
    fn known_min(&self) -> Option<f64> {
        None
    }
}

/// Wraps a plain function or closure as an [`Objective`].
#[derive(Debug, Clone)]
pub struct FnObjective<F> {
    name: &'static str,
    bounds: BoxBounds,
    known_min: Option<f64>,
    f: F,
}

impl<F: Fn(&[f64]) -> f64> FnObjective<F> {
    pub fn new(name: &'static str, bounds: BoxBounds, f: F) -> Self {
        Self {
            name,
            bounds,
            known_min: None,
            f,
        }
    }

    pub fn with_known_min(mut self, known_min: f64) -> Self {
        self.known_min = Some(known_min);
        self
    }
}

impl<F: Fn(&[f64]) -> f64> Objective for FnObjective<F> {
    fn name(&self) -> &str {
        self.name
    }

    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }

    fn value(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }

    fn known_min(&self) -> Option<f64> {
        self.known_min
    }
}
