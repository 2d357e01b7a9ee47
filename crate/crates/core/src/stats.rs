//! Cross-trial summary statistics and average convergence curves.


use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Best / median / mean / worst / sample standard deviation of a set of
/// final fitness values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub best: f64,
    pub median: f64,
    pub mean: f64,
    pub worst: f64,
    pub st_dev: f64,
}

/// Summarizes final fitnesses. The median of an even count averages the two
/// central values; the standard deviation uses the `N - 1` divisor (0 for a
/// single value).
pub fn summarize(finals: &[f64]) -> Result<SummaryStats> {
    if finals.is_empty() {
        return Err(Error::Empty("final fitness list"));
    }
    if finals.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("final fitness list"));
    }
    let mut sorted = finals.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    };
    let mean = sorted.iter().sum::<f64>() / n as f64;
    let st_dev = if n > 1 {
        let ss: f64 = sorted.iter().map(|v| (v - mean) * (v - mean)).sum();
        math::sqrt(ss / (n - 1) as f64)
    } else {
        0.0
    };
    // Rounding in the mean can step outside [best, worst] when all values
    // are (nearly) equal.
    let mean = mean.clamp(sorted[0], sorted[n - 1]);
    Ok(SummaryStats {
        best: sorted[0],
        median,
        mean,
        worst: sorted[n - 1],
        st_dev,
    })
}

/// Per-iteration mean over equally long fitness histories.
pub fn average_fitness_curve<'a, I>(histories: I) -> Result<Vec<f64>>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut iter = histories.into_iter();
    let first = iter.next().ok_or(Error::Empty("history list"))?;
    let mut sum = first.to_vec();
    let mut count = 1usize;
    for h in iter {
        if h.len() != sum.len() {
            return Err(Error::RaggedHistories {
                first: sum.len(),
                other: h.len(),
            });
        }
        for (s, v) in sum.iter_mut().zip(h) {
            *s += v;
        }
        count += 1;
    }
    if count == 1 {
        return Ok(sum);
    }
    let n = count as f64;
    Ok(sum.into_iter().map(|s| s / n).collect::<Vec<_>>())
}

/// Average curve for histories given as owned vectors.
pub fn average_of(histories: &[Vec<f64>]) -> Result<Vec<f64>> {
    average_fitness_curve(histories.iter().map(Vec::as_slice))
}
