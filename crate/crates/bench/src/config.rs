//! Experiment configuration: defaults, CLI/suite overrides and validation.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::builder::PossibleValuesParser;
use clap::{Args, ValueEnum};
use serde::Deserialize;
use sta_core::benchmarks::{Benchmark, BenchmarkKind};
use sta_core::crossover::CrossoverKind;
use sta_core::staii::StaIIConfig;
use sta_core::{BoundsPolicy, StaParams};

use crate::error::HarnessError;

pub const DEFAULT_TRIALS: usize = 30;
pub const DEFAULT_ITERS: usize = 1000;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SN: usize = 30;
pub const DEFAULT_CF: usize = 50;
pub const DEFAULT_ARITH_ALPHA: f64 = 0.5;
pub const DEFAULT_SBX_ETA: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Individual-based state transition algorithm.
    Sta1,
    /// Population-based variant with intermittent exchange.
    Sta2,
    /// Basic random optimization baseline.
    Ro,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Sta1 => "sta1",
            Algorithm::Sta2 => "sta2",
            Algorithm::Ro => "ro",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossoverName {
    Proposed,
    Arithmetical,
    Linear,
    Sbx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundsName {
    Clip,
    None,
}

impl From<BoundsName> for BoundsPolicy {
    fn from(b: BoundsName) -> Self {
        match b {
            BoundsName::Clip => BoundsPolicy::Clip,
            BoundsName::None => BoundsPolicy::None,
        }
    }
}

/// Optional settings for one experiment, shared by the command line and the
/// suite file. Anything left unset falls back to the per-algorithm default.
#[derive(Debug, Clone, Default, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Overrides {
    /// Algorithm to run.
    #[arg(long, value_enum)]
    pub algo: Option<Algorithm>,

    /// Benchmark function.
    #[arg(long = "fn", value_name = "NAME", value_parser = PossibleValuesParser::new(BenchmarkKind::NAMES))]
    #[serde(rename = "fn")]
    pub function: Option<String>,

    /// Problem dimension [default: 2].
    #[arg(long)]
    pub dim: Option<usize>,

    /// Independent trials [default: 30].
    #[arg(long)]
    pub trials: Option<usize>,

    /// Outer iterations per trial [default: 1000].
    #[arg(long)]
    pub iters: Option<usize>,

    /// Base seed; trial k uses seed + k [default: 0].
    #[arg(long)]
    pub seed: Option<u64>,

    /// Search enforcement [default: 30 for sta1, 10 for sta2].
    #[arg(long)]
    pub se: Option<usize>,

    /// Number of states (sta2) [default: 30].
    #[arg(long)]
    pub sn: Option<usize>,

    /// Communication frequency (sta2) [default: 50].
    #[arg(long)]
    pub cf: Option<usize>,

    /// Starting and reset value of the rotation factor [default: 1].
    #[arg(long)]
    pub alpha_max: Option<f64>,

    /// Rotation factor reset threshold [default: 1e-4].
    #[arg(long)]
    pub alpha_min: Option<f64>,

    /// Translation factor [default: 1].
    #[arg(long)]
    pub beta: Option<f64>,

    /// Expansion factor [default: 1].
    #[arg(long)]
    pub gamma: Option<f64>,

    /// Axesion factor [default: 1].
    #[arg(long)]
    pub delta: Option<f64>,

    /// Lessening coefficient of the rotation factor [default: 2].
    #[arg(long)]
    pub fc: Option<f64>,

    /// Exchange crossover (sta2) [default: proposed].
    #[arg(long, value_enum)]
    pub crossover: Option<CrossoverName>,

    /// Mix weight of the arithmetical crossover [default: 0.5].
    #[arg(long)]
    pub arith_alpha: Option<f64>,

    /// Distribution index of the SBX crossover [default: 2].
    #[arg(long)]
    pub sbx_eta: Option<f64>,

    /// Gaussian step size of the random-optimization baseline [default: 1].
    #[arg(long)]
    pub sigma: Option<f64>,

    /// Box handling for candidates [default: clip].
    #[arg(long, value_enum)]
    pub bounds: Option<BoundsName>,
}

macro_rules! merge_fields {
    ($self:ident, $base:ident; $($f:ident),* $(,)?) => {
        Overrides { $($f: $self.$f.clone().or_else(|| $base.$f.clone()),)* }
    };
}

impl Overrides {
    /// Fields set in `self` win; the rest come from `base`.
    pub fn or(&self, base: &Overrides) -> Overrides {
        merge_fields!(self, base;
            algo, function, dim, trials, iters, seed, se, sn, cf, alpha_max, alpha_min,
            beta, gamma, delta, fc, crossover, arith_alpha, sbx_eta, sigma, bounds)
    }

    pub fn is_empty(&self) -> bool {
        *self == Overrides::default()
    }

    /// Fills defaults and validates the result.
    pub fn resolve(&self) -> Result<ExperimentConfig, HarnessError> {
        let algorithm = self.algo.unwrap_or(Algorithm::Sta1);
        let function = self
            .function
            .as_deref()
            .ok_or_else(|| HarnessError::config(format!("missing function name (one of: {})", names())))?;
        let function: BenchmarkKind = function.parse().map_err(|_| {
            HarnessError::config(format!("unknown function `{function}` (valid: {})", names()))
        })?;

        let sta_only = [
            ("se", self.se.is_some()),
            ("alpha-max", self.alpha_max.is_some()),
            ("alpha-min", self.alpha_min.is_some()),
            ("beta", self.beta.is_some()),
            ("gamma", self.gamma.is_some()),
            ("delta", self.delta.is_some()),
            ("fc", self.fc.is_some()),
        ];
        let sta2_only = [
            ("sn", self.sn.is_some()),
            ("cf", self.cf.is_some()),
            ("crossover", self.crossover.is_some()),
            ("arith-alpha", self.arith_alpha.is_some()),
            ("sbx-eta", self.sbx_eta.is_some()),
        ];
        let reject = |flags: &[(&str, bool)], algo: Algorithm| -> Result<(), HarnessError> {
            match flags.iter().find(|(_, set)| *set) {
                Some((name, _)) => Err(HarnessError::config(format!("`{name}` does not apply to algorithm {algo}"))),
                None => Ok(()),
            }
        };
        match algorithm {
            Algorithm::Sta1 => reject(&sta2_only, algorithm)?,
            Algorithm::Ro => {
                reject(&sta_only, algorithm)?;
                reject(&sta2_only, algorithm)?;
            }
            Algorithm::Sta2 => {}
        }
        if algorithm != Algorithm::Ro && self.sigma.is_some() {
            return Err(HarnessError::config(format!("`sigma` does not apply to algorithm {algorithm}")));
        }
        let crossover_name = self.crossover.unwrap_or(CrossoverName::Proposed);
        if self.arith_alpha.is_some() && crossover_name != CrossoverName::Arithmetical {
            return Err(HarnessError::config("`arith-alpha` requires `crossover = arithmetical`"));
        }
        if self.sbx_eta.is_some() && crossover_name != CrossoverName::Sbx {
            return Err(HarnessError::config("`sbx-eta` requires `crossover = sbx`"));
        }

        let mut cfg = ExperimentConfig::new(algorithm, function, self.dim.unwrap_or(2));
        cfg.trials = self.trials.unwrap_or(cfg.trials);
        cfg.max_iters = self.iters.unwrap_or(cfg.max_iters);
        cfg.base_seed = self.seed.unwrap_or(cfg.base_seed);
        let p = &mut cfg.params;
        p.se = self.se.unwrap_or(p.se);
        if let Some(a) = self.alpha_max {
            p.alpha_max = a;
            p.alpha = a;
        }
        p.alpha_min = self.alpha_min.unwrap_or(p.alpha_min);
        p.beta = self.beta.unwrap_or(p.beta);
        p.gamma = self.gamma.unwrap_or(p.gamma);
        p.delta = self.delta.unwrap_or(p.delta);
        p.fc = self.fc.unwrap_or(p.fc);
        cfg.sn = self.sn.unwrap_or(cfg.sn);
        cfg.cf = self.cf.unwrap_or(cfg.cf);
        cfg.crossover = match crossover_name {
            CrossoverName::Proposed => CrossoverKind::Proposed,
            CrossoverName::Arithmetical => CrossoverKind::Arithmetical {
                alpha_c: self.arith_alpha.unwrap_or(DEFAULT_ARITH_ALPHA),
            },
            CrossoverName::Linear => CrossoverKind::Linear,
            CrossoverName::Sbx => CrossoverKind::Sbx {
                eta_c: self.sbx_eta.unwrap_or(DEFAULT_SBX_ETA),
            },
        };
        cfg.step_sigma = self.sigma.unwrap_or(cfg.step_sigma);
        cfg.bounds = self.bounds.map(Into::into).unwrap_or(cfg.bounds);
        cfg.validate()?;
        Ok(cfg)
    }
}

fn names() -> String {
    BenchmarkKind::NAMES.join(", ")
}

/// A fully specified experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    pub function: BenchmarkKind,
    pub dim: usize,
    pub trials: usize,
    pub max_iters: usize,
    pub base_seed: u64,
    pub params: StaParams,
    pub sn: usize,
    pub cf: usize,
    pub crossover: CrossoverKind,
    pub step_sigma: f64,
    pub bounds: BoundsPolicy,
}

impl ExperimentConfig {
    /// Default protocol for `algorithm`: 30 trials of 1000 iterations, with the
    /// individual (SE 30) or population (SN 30, SE 10, CF 50) settings.
    pub fn new(algorithm: Algorithm, function: BenchmarkKind, dim: usize) -> Self {
        let params = match algorithm {
            Algorithm::Sta2 => StaParams::population_default(),
            _ => StaParams::default(),
        };
        Self {
            algorithm,
            function,
            dim,
            trials: DEFAULT_TRIALS,
            max_iters: DEFAULT_ITERS,
            base_seed: DEFAULT_SEED,
            params,
            sn: DEFAULT_SN,
            cf: DEFAULT_CF,
            crossover: CrossoverKind::Proposed,
            step_sigma: sta_core::baseline::DEFAULT_STEP_SIGMA,
            bounds: BoundsPolicy::Clip,
        }
    }

    pub fn benchmark(&self) -> Result<Benchmark, HarnessError> {
        Ok(Benchmark::new(self.function, self.dim)?)
    }

    pub fn staii_config(&self) -> StaIIConfig {
        StaIIConfig {
            params: self.params,
            sn: self.sn,
            cf: self.cf,
            crossover: self.crossover,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.trials == 0 {
            return Err(HarnessError::config("trials must be at least 1"));
        }
        if self.max_iters == 0 {
            return Err(HarnessError::config("iters must be at least 1"));
        }
        self.benchmark()?;
        match self.algorithm {
            Algorithm::Sta1 => self.params.validate()?,
            Algorithm::Sta2 => self.staii_config().validate()?,
            Algorithm::Ro => {
                if !(self.step_sigma.is_finite() && self.step_sigma > 0.0) {
                    return Err(HarnessError::config("sigma must be positive and finite"));
                }
            }
        }
        Ok(())
    }

    /// `<function>_<dim>d_<algorithm>`, used to name trace files.
    pub fn label(&self) -> String {
        format!("{}_{}d_{}", self.function, self.dim, self.algorithm)
    }
}

/// A batch of experiments read from a TOML suite file.
///
/// ```toml
/// out = "results/summary.csv"     # optional summary path
/// trace = "results/traces"        # optional trace directory
///
/// [defaults]                      # optional, same keys as an experiment
/// trials = 30
/// iters = 1000
///
/// [[experiment]]
/// algo = "sta2"
/// fn = "griewank"
/// dim = 10
/// ```
///
/// Experiment keys mirror the command-line flags without the leading dashes.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    pub out: Option<PathBuf>,
    pub trace: Option<PathBuf>,
    #[serde(default)]
    pub defaults: Overrides,
    #[serde(default, rename = "experiment")]
    pub experiments: Vec<Overrides>,
}

impl Suite {
    pub fn parse(text: &str, path: &Path) -> Result<Self, HarnessError> {
        toml::from_str(text).map_err(|source| HarnessError::Suite {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, path)
    }

    /// Resolves every experiment against the suite defaults.
    pub fn configs(&self) -> Result<Vec<ExperimentConfig>, HarnessError> {
        if self.experiments.is_empty() {
            return Err(HarnessError::config("suite contains no [[experiment]] entries"));
        }
        self.experiments
            .iter()
            .enumerate()
            .map(|(i, e)| {
                e.or(&self.defaults)
                    .resolve()
                    .map_err(|err| HarnessError::config(format!("experiment #{}: {err}", i + 1)))
            })
            .collect()
    }
}
