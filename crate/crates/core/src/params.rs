use crate::error::{Error, Result};

/// Whether candidates are projected onto the objective's box before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundsPolicy {
    #[default]
    Clip,
    /// No projection; the box is only used to draw the initial state.
    None,
}

impl BoundsPolicy {
    pub fn clips(self) -> bool {
        matches!(self, BoundsPolicy::Clip)
    }
}

/// Control parameters of the transformation operators.
///
/// `alpha` is the rotation factor the run starts from. It decays by `fc` after
/// each outer iteration and is reset to `alpha_max` once it drops below
/// `alpha_min`. `beta`, `gamma` and `delta` stay fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaParams {
    /// Search enforcement: candidates sampled per operator application.
    pub se: usize,
    pub alpha: f64,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    /// Lessening coefficient, the base of the rotation-factor decay.
    pub fc: f64,
}

impl Default for StaParams {
    /// Individual-engine experiment settings: SE 30, alpha 1 -> 1e-4,
    /// beta = gamma = delta = 1, fc 2.
    fn default() -> Self {
        Self {
            se: 30,
            alpha: 1.0,
            alpha_min: 1e-4,
            alpha_max: 1.0,
            beta: 1.0,
            gamma: 1.0,
            delta: 1.0,
            fc: 2.0,
        }
    }
}

impl StaParams {
    /// Population-engine experiment settings: as [`Default`] but SE 10.
    pub fn population_default() -> Self {
        Self {
            se: 10,
            ..Self::default()
        }
    }

    /// Search enforcement equal to the problem dimension.
    pub fn with_se_from_dim(self, dim: usize) -> Self {
        Self { se: dim.max(1), ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if self.se == 0 {
            return Err(Error::param("se", "must be at least 1"));
        }
        if !positive(self.alpha_min) {
            return Err(Error::param("alpha_min", "must be positive and finite"));
        }
        if !positive(self.alpha_max) {
            return Err(Error::param("alpha_max", "must be positive and finite"));
        }
        if self.alpha_min > self.alpha_max {
            return Err(Error::param("alpha_min", "must not exceed alpha_max"));
        }
        if !(self.alpha_min..=self.alpha_max).contains(&self.alpha) {
            return Err(Error::param("alpha", "must lie in [alpha_min, alpha_max]"));
        }
        if !positive(self.beta) {
            return Err(Error::param("beta", "must be positive and finite"));
        }
        if !positive(self.gamma) {
            return Err(Error::param("gamma", "must be positive and finite"));
        }
        if !positive(self.delta) {
            return Err(Error::param("delta", "must be positive and finite"));
        }
        if !(self.fc.is_finite() && self.fc > 1.0) {
            return Err(Error::param("fc", "must be greater than 1"));
        }
        Ok(())
    }
}
