//! Experiment harness for `sta-core`: multi-trial runs, summary statistics,
//! CSV output and the `sta` command line.

pub mod cli;
pub mod config;
mod error;
pub mod experiment;
pub mod output;

pub use config::{Algorithm, ExperimentConfig, Overrides, Suite};
pub use error::HarnessError;
pub use experiment::{run_experiment, ExperimentResult, TrialRecord};
pub use output::{write_results, OutputPaths};
