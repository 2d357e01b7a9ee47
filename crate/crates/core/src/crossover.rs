//! Crossover operators used for population communication.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::rng::RngStream;
use crate::state::StateVector;

/// Which crossover produces offspring during an exchange.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum CrossoverKind {
    /// Per-component 0-1 mixing: each child component is copied whole from
    /// one of the two parents.
    #[default]
    Proposed,
    /// Convex combination with mix weight `alpha_c` in `[0, 1]`.
    Arithmetical { alpha_c: f64 },
    /// Three children: two extrapolations and the midpoint.
    Linear,
    /// Simulated binary crossover with distribution index `eta_c > 0`.
    Sbx { eta_c: f64 },
}

impl CrossoverKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CrossoverKind::Arithmetical { alpha_c } if !(0.0..=1.0).contains(&alpha_c) => {
                Err(Error::param("alpha_c", "must lie in [0, 1]"))
            }
            CrossoverKind::Sbx { eta_c } if !(eta_c.is_finite() && eta_c > 0.0) => {
                Err(Error::param("eta_c", "must be positive and finite"))
            }
            _ => Ok(()),
        }
    }

    /// Children produced per parent pair.
    pub fn offspring_per_pair(&self) -> usize {
        match self {
            CrossoverKind::Linear => 3,
            _ => 2,
        }
    }

    /// Produces the offspring of one parent pair, in a fixed order.
    pub fn offspring(&self, x1: &[f64], x2: &[f64], rng: &mut RngStream) -> Result<Vec<StateVector>> {
        Ok(match *self {
            CrossoverKind::Proposed => {
                let (a, b) = crossover_proposed(x1, x2, rng)?;
                vec![a, b]
            }
            CrossoverKind::Arithmetical { alpha_c } => {
                let (a, b) = crossover_arithmetical(x1, x2, alpha_c)?;
                vec![a, b]
            }
            CrossoverKind::Linear => {
                let (a, b, c) = crossover_linear(x1, x2)?;
                vec![a, b, c]
            }
            CrossoverKind::Sbx { eta_c } => {
                let (a, b) = crossover_sbx(x1, x2, eta_c, rng)?;
                vec![a, b]
            }
        })
    }
}

fn same_dim(x1: &[f64], x2: &[f64]) -> Result<()> {
    if x1.len() != x2.len() {
        return Err(Error::DimensionMismatch {
            expected: x1.len(),
            got: x2.len(),
        });
    }
    Ok(())
}

pub fn crossover_proposed(x1: &[f64], x2: &[f64], rng: &mut RngStream) -> Result<(StateVector, StateVector)> {
    same_dim(x1, x2)?;
    let mut y1 = StateVector::zeros(x1.len());
    let mut y2 = StateVector::zeros(x1.len());
    for i in 0..x1.len() {
        // delta_i then eta_i; 1 keeps the first parent's component.
        y1[i] = if rng.bit() { x1[i] } else { x2[i] };
        y2[i] = if rng.bit() { x1[i] } else { x2[i] };
    }
    Ok((y1, y2))
}

pub fn crossover_arithmetical(x1: &[f64], x2: &[f64], alpha_c: f64) -> Result<(StateVector, StateVector)> {
    same_dim(x1, x2)?;
    if !(0.0..=1.0).contains(&alpha_c) {
        return Err(Error::param("alpha_c", "must lie in [0, 1]"));
    }
    let w = 1.0 - alpha_c;
    let mix = |a: f64, b: f64| if a == b { a } else { alpha_c * a + w * b };
    let y1 = x1.iter().zip(x2).map(|(&a, &b)| mix(a, b)).collect();
    let y2 = x1.iter().zip(x2).map(|(&a, &b)| mix(b, a)).collect();
    Ok((y1, y2))
}

pub fn crossover_linear(x1: &[f64], x2: &[f64]) -> Result<(StateVector, StateVector, StateVector)> {
    same_dim(x1, x2)?;
    let lin = |p: f64, q: f64, a: f64, b: f64| if a == b { a } else { p * a + q * b };
    let y1 = x1.iter().zip(x2).map(|(&a, &b)| lin(1.5, -0.5, a, b)).collect();
    let y2 = x1.iter().zip(x2).map(|(&a, &b)| lin(-0.5, 1.5, a, b)).collect();
    let y3 = x1.iter().zip(x2).map(|(&a, &b)| lin(0.5, 0.5, a, b)).collect();
    Ok((y1, y2, y3))
}

/// Inverse CDF of the SBX spread factor density
/// `0.5 (eta + 1) b^eta` on `[0, 1]` and `0.5 (eta + 1) / b^(eta + 2)` above 1.
pub fn sbx_beta_from_uniform(u: f64, eta_c: f64) -> f64 {
    let e = 1.0 / (eta_c + 1.0);
    if u <= 0.5 {
        math::powf(2.0 * u, e)
    } else {
        math::powf(1.0 / (2.0 * (1.0 - u)), e)
    }
}

pub fn sbx_sample_beta(eta_c: f64, rng: &mut RngStream) -> f64 {
    sbx_beta_from_uniform(rng.uniform01(), eta_c)
}

pub fn crossover_sbx(
    x1: &[f64],
    x2: &[f64],
    eta_c: f64,
    rng: &mut RngStream,
) -> Result<(StateVector, StateVector)> {
    same_dim(x1, x2)?;
    if !(eta_c.is_finite() && eta_c > 0.0) {
        return Err(Error::param("eta_c", "must be positive and finite"));
    }
    let mut y1 = StateVector::zeros(x1.len());
    let mut y2 = StateVector::zeros(x1.len());
    for i in 0..x1.len() {
        let b = sbx_sample_beta(eta_c, rng);
        let (y1i, y2i) = sbx_pair(x1[i], x2[i], b);
        y1[i] = y1i;
        y2[i] = y2i;
    }
    Ok((y1, y2))
}

#[inline]
fn sbx_pair(a: f64, b: f64, beta: f64) -> (f64, f64) {
    // Equal components must come back bit-identical.
    if a == b {
        return (a, b);
    }
    (
        0.5 * ((1.0 - beta) * a + (1.0 + beta) * b),
        0.5 * ((1.0 + beta) * a + (1.0 - beta) * b),
    )
}
