//! The classic continuous test functions with their search ranges and known
//! minima.
//!
//! Two conventions differ from some printed forms of these functions:
//! Michalewicz carries a leading minus (so its optimum is negative) and Easom
//! uses squared distances in the exponent, which puts its `-1` optimum at
//! `(pi, pi)`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::{E, PI};
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::math::{cos, exp, sin, sqrt};
use crate::objective::Objective;
use crate::state::BoxBounds;

/// Per-coordinate Schwefel minimum, attained at [`SCHWEFEL_ARGMIN`].
pub const SCHWEFEL_MIN_PER_DIM: f64 = -418.982_887_272_433_7;
pub const SCHWEFEL_ARGMIN: f64 = 420.968_746_347_278_2;

/// Per-coordinate minimizers of Michalewicz (m = 10), the i-th entry belongs
/// to coordinate i; the function is separable so any prefix is optimal for
/// the matching dimension.
pub const MICHALEWICZ_ARGMIN: [f64; 10] = [
    2.202_905_521_642_599,
    1.570_796_329_120_986_8,
    1.284_991_574_833_488_4,
    1.923_058_472_523_394_8,
    1.720_469_776_008_865_4,
    1.570_796_331_074_750_8,
    1.454_413_976_638_215_6,
    1.756_086_526_479_843,
    1.655_717_423_284_695_2,
    1.570_796_334_283_124_2,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchmarkKind {
    Sphere,
    Rastrigin,
    Griewank,
    Rosenbrock,
    Schwefel,
    Ackley,
    Michalewicz,
    Schaffer,
    Easom,
    GoldsteinPrice,
}

impl BenchmarkKind {
    pub const ALL: [BenchmarkKind; 10] = [
        BenchmarkKind::Sphere,
        BenchmarkKind::Rastrigin,
        BenchmarkKind::Griewank,
        BenchmarkKind::Rosenbrock,
        BenchmarkKind::Schwefel,
        BenchmarkKind::Ackley,
        BenchmarkKind::Michalewicz,
        BenchmarkKind::Schaffer,
        BenchmarkKind::Easom,
        BenchmarkKind::GoldsteinPrice,
    ];

    pub const NAMES: [&'static str; 10] = [
        "sphere",
        "rastrigin",
        "griewank",
        "rosenbrock",
        "schwefel",
        "ackley",
        "michalewicz",
        "schaffer",
        "easom",
        "goldstein_price",
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }

    /// Search interval, replicated over every coordinate.
    pub fn range(self) -> (f64, f64) {
        match self {
            BenchmarkKind::Sphere => (-100.0, 100.0),
            BenchmarkKind::Rastrigin => (-5.12, 5.12),
            BenchmarkKind::Griewank => (-600.0, 600.0),
            BenchmarkKind::Rosenbrock => (-30.0, 30.0),
            BenchmarkKind::Schwefel => (-500.0, 500.0),
            BenchmarkKind::Ackley => (-32.0, 32.0),
            BenchmarkKind::Michalewicz => (0.0, PI),
            BenchmarkKind::Schaffer => (-100.0, 100.0),
            BenchmarkKind::Easom => (-100.0, 100.0),
            BenchmarkKind::GoldsteinPrice => (-2.0, 2.0),
        }
    }

    pub fn supports_dim(self, dim: usize) -> bool {
        match self {
            BenchmarkKind::Schaffer | BenchmarkKind::Easom | BenchmarkKind::GoldsteinPrice => dim == 2,
            BenchmarkKind::Rosenbrock => dim >= 2,
            _ => dim >= 1,
        }
    }

    pub fn known_min(self, dim: usize) -> Option<f64> {
        match self {
            BenchmarkKind::Schwefel => Some(SCHWEFEL_MIN_PER_DIM * dim as f64),
            BenchmarkKind::Michalewicz => match dim {
                2 => Some(-1.8013),
                10 => Some(-9.6602),
                _ => None,
            },
            BenchmarkKind::Easom => Some(-1.0),
            BenchmarkKind::GoldsteinPrice => Some(3.0),
            _ => Some(0.0),
        }
    }

    /// A global minimizer, where one is known in closed form or numerically.
    pub fn known_argmin(self, dim: usize) -> Option<Vec<f64>> {
        let fill = |v: f64| Some((0..dim).map(|_| v).collect());
        match self {
            BenchmarkKind::Rosenbrock => fill(1.0),
            BenchmarkKind::Schwefel => fill(SCHWEFEL_ARGMIN),
            BenchmarkKind::Michalewicz if dim <= MICHALEWICZ_ARGMIN.len() => {
                Some(MICHALEWICZ_ARGMIN[..dim].to_vec())
            }
            BenchmarkKind::Michalewicz => None,
            BenchmarkKind::Easom => Some(alloc::vec![PI, PI]),
            BenchmarkKind::GoldsteinPrice => Some(alloc::vec![0.0, -1.0]),
            _ => fill(0.0),
        }
    }

    pub fn eval(self, x: &[f64]) -> f64 {
        match self {
            BenchmarkKind::Sphere => sphere(x),
            BenchmarkKind::Rastrigin => rastrigin(x),
            BenchmarkKind::Griewank => griewank(x),
            BenchmarkKind::Rosenbrock => rosenbrock(x),
            BenchmarkKind::Schwefel => schwefel(x),
            BenchmarkKind::Ackley => ackley(x),
            BenchmarkKind::Michalewicz => michalewicz(x),
            BenchmarkKind::Schaffer => schaffer(x),
            BenchmarkKind::Easom => easom(x),
            BenchmarkKind::GoldsteinPrice => goldstein_price(x),
        }
    }
}

impl fmt::Display for BenchmarkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchmarkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| Self::ALL[i])
            .ok_or_else(|| Error::UnknownBenchmark(s.to_string()))
    }
}

/// A benchmark instantiated at a dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Benchmark {
    kind: BenchmarkKind,
    bounds: BoxBounds,
    known_min: Option<f64>,
}

impl Benchmark {
    pub fn new(kind: BenchmarkKind, dim: usize) -> Result<Self> {
        if !kind.supports_dim(dim) {
            return Err(Error::UnsupportedDimension { name: kind.name(), dim });
        }
        let (lo, hi) = kind.range();
        Ok(Self {
            kind,
            bounds: BoxBounds::uniform(dim, lo, hi)?,
            known_min: kind.known_min(dim),
        })
    }

    pub fn kind(&self) -> BenchmarkKind {
        self.kind
    }

    pub fn known_argmin(&self) -> Option<Vec<f64>> {
        self.kind.known_argmin(self.dim())
    }
}

impl Objective for Benchmark {
    fn name(&self) -> &str {
        self.kind.name()
    }

    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.kind.eval(x)
    }

    fn known_min(&self) -> Option<f64> {
        self.known_min
    }
}

/// Looks up a benchmark by its lowercase name (see [`BenchmarkKind::NAMES`]).
pub fn make_benchmark(name: &str, dim: usize) -> Result<Benchmark> {
    Benchmark::new(name.parse()?, dim)
}

/// Evaluates `obj` after checking the input dimension.
pub fn eval_benchmark(obj: &Benchmark, x: &[f64]) -> Result<f64> {
    if x.len() != obj.dim() {
        return Err(Error::DimensionMismatch {
            expected: obj.dim(),
            got: x.len(),
        });
    }
    Ok(obj.value(x))
}

/// Values on a uniform `resolution x resolution` grid over a 2-D objective's
/// box, as `[x1, x2, f]` rows with `x1` varying slowest.
pub fn grid_sample<O: Objective + ?Sized>(obj: &O, resolution: usize) -> Result<Vec<[f64; 3]>> {
    if obj.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: obj.dim() });
    }
    if resolution < 2 {
        return Err(Error::param("resolution", "must be at least 2"));
    }
    let b = obj.bounds();
    let node = |d: usize, k: usize| {
        let (lo, hi) = (b.lower()[d], b.upper()[d]);
        if k == resolution - 1 {
            hi
        } else {
            lo + (hi - lo) * k as f64 / (resolution - 1) as f64
        }
    };
    let mut rows = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let x1 = node(0, i);
        for j in 0..resolution {
            let x2 = node(1, j);
            rows.push([x1, x2, obj.value(&[x1, x2])]);
        }
    }
    Ok(rows)
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter().map(|&v| v * v - 10.0 * cos(2.0 * PI * v) + 10.0).sum()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum();
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, &v)| cos(v / sqrt((i + 1) as f64)))
        .product();
    sum / 4000.0 - prod + 1.0
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| {
            let a = w[1] - w[0] * w[0];
            let b = w[0] - 1.0;
            100.0 * a * a + b * b
        })
        .sum()
}

pub fn schwefel(x: &[f64]) -> f64 {
    x.iter().map(|&v| -v * sin(sqrt(v.abs()))).sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs: f64 = x.iter().map(|&v| cos(2.0 * PI * v)).sum::<f64>() / n;
    20.0 + E - 20.0 * exp(-0.2 * sqrt(sq)) - exp(cs)
}

pub fn michalewicz(x: &[f64]) -> f64 {
    -x.iter()
        .enumerate()
        .map(|(i, &v)| {
            let s = sin((i + 1) as f64 * v * v / PI);
            let s2 = s * s;
            let s4 = s2 * s2;
            let s16 = s4 * s4 * s4 * s4;
            sin(v) * s16 * s4
        })
        .sum::<f64>()
}

pub fn schaffer(x: &[f64]) -> f64 {
    let r2 = x[0] * x[0] + x[1] * x[1];
    let s = sin(sqrt(r2));
    let d = 1.0 + 0.001 * r2;
    0.5 + (s * s - 0.5) / (d * d)
}

pub fn easom(x: &[f64]) -> f64 {
    let (a, b) = (x[0] - PI, x[1] - PI);
    -cos(x[0]) * cos(x[1]) * exp(-(a * a + b * b))
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let s = x1 + x2 + 1.0;
    let t = 2.0 * x1 - 3.0 * x2;
    let a = 1.0
        + s * s * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let b = 30.0
        + t * t * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    a * b
}
