//! State transition algorithm (STA) for unconstrained, box-bounded continuous
//! minimization.
//!
//! The crate provides the four state transformation operators (rotation,
//! translation, expansion, axesion), the individual-based engine
//! ([`stai`]), the population-based engine with intermittent crossover
//! exchange ([`staii`]), a basic random-optimization baseline, the classic
//! continuous benchmark catalog, and the summary statistics used to report
//! multi-trial experiments.
//!
//! Everything here is `no_std` (with `alloc`). File formats, the CLI and the
//! parallel trial runner live in the `sta-bench` crate.
//!
//! ```
//! use sta_core::{benchmarks::make_benchmark, stai::sta1_run, BoundsPolicy, StaParams};
//!
//! let sphere = make_benchmark("sphere", 2).unwrap();
//! let run = sta1_run(&sphere, &StaParams::default(), 200, 7, BoundsPolicy::Clip).unwrap();
//! assert!(run.best.fitness < 1e-20);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod baseline;
pub mod benchmarks;
pub mod crossover;
mod error;
mod math;
pub mod objective;
pub mod operators;
mod params;
mod rng;
pub mod stai;
pub mod staii;
mod state;
pub mod stats;

pub use error::{Error, Result};
pub use objective::{FnObjective, Objective};
pub use params::{BoundsPolicy, StaParams};
pub use rng::{trial_seed, RngStream};
pub use state::{
    clip_to_bounds, evaluate, sample_uniform_in_bounds, BoxBounds, EvalCounter, EvaluatedState,
    RunRecord, StateVector,
};
