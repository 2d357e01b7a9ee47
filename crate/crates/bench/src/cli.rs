//! The `sta` command line.

use std::ffi::OsString;
use std::io;
use std::path::PathBuf;

use clap::{CommandFactory, Parser};
use sta_core::benchmarks::{grid_sample, make_benchmark};

use crate::config::{ExperimentConfig, Overrides, Suite};
use crate::error::HarnessError;
use crate::experiment::run_experiment;
use crate::output::{write_grid, write_results, write_summary_to, OutputPaths};

/// Runs state transition algorithm experiments on the benchmark catalog.
///
/// Unset parameters take the standard protocol: 30 trials of 1000 iterations;
/// sta1 uses SE 30, sta2 uses SN 30, SE 10, CF 50; the rotation factor decays
/// from 1 to 1e-4 with fc 2 and beta = gamma = delta = 1.
#[derive(Debug, Parser)]
#[command(name = "sta", version)]
pub struct Cli {
    #[command(flatten)]
    pub experiment: Overrides,

    /// Summary CSV path; printed to stdout when omitted.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Directory for per-trial traces and average curves.
    #[arg(long, value_name = "DIR")]
    pub trace: Option<PathBuf>,

    /// TOML file describing several experiments.
    #[arg(long, value_name = "FILE")]
    pub suite: Option<PathBuf>,

    /// Export an N x N landscape grid of a 2-D function instead of optimizing.
    #[arg(long, value_name = "N")]
    pub grid: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Invocation {
    Run {
        experiments: Vec<ExperimentConfig>,
        outputs: OutputPaths,
    },
    Grid {
        function: String,
        resolution: usize,
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(e) if !e.use_stderr() => 0,
            CliError::Usage(_) => 2,
            CliError::Harness(HarnessError::Config(_) | HarnessError::Core(_) | HarnessError::Suite { .. }) => 2,
            CliError::Harness(_) => 1,
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(Cli::command().error(clap::error::ErrorKind::ArgumentConflict, msg))
}

/// Parses `argv` (including the program name) into an invocation.
pub fn parse_cli<I, T>(argv: I) -> Result<Invocation, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    if let Some(resolution) = cli.grid {
        let function = cli
            .experiment
            .function
            .clone()
            .ok_or_else(|| usage("--grid requires --fn"))?;
        if cli.suite.is_some() || cli.trace.is_some() {
            return Err(usage("--grid cannot be combined with --suite or --trace"));
        }
        return Ok(Invocation::Grid {
            function,
            resolution,
            out: cli.out,
        });
    }
    if let Some(path) = &cli.suite {
        if !cli.experiment.is_empty() {
            return Err(usage("experiment flags cannot be combined with --suite; put them in the suite file"));
        }
        let suite = Suite::load(path)?;
        let experiments = suite.configs().map_err(usage)?;
        return Ok(Invocation::Run {
            experiments,
            outputs: OutputPaths {
                summary: cli.out.or(suite.out),
                trace_dir: cli.trace.or(suite.trace),
            },
        });
    }
    let cfg = cli.experiment.resolve().map_err(usage)?;
    Ok(Invocation::Run {
        experiments: vec![cfg],
        outputs: OutputPaths {
            summary: cli.out,
            trace_dir: cli.trace,
        },
    })
}

/// Executes an invocation, writing files and progress lines.
pub fn execute(inv: Invocation) -> Result<(), HarnessError> {
    match inv {
        Invocation::Grid {
            function,
            resolution,
            out,
        } => {
            let obj = make_benchmark(&function, 2)?;
            let rows = grid_sample(&obj, resolution)?;
            match out {
                Some(path) => write_grid(&path, &rows),
                None => {
                    let text = grid_csv(&rows);
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Invocation::Run { experiments, outputs } => {
            let mut results = Vec::with_capacity(experiments.len());
            for cfg in &experiments {
                let res = run_experiment(cfg)?;
                if !res.flagged.is_empty() {
                    eprintln!(
                        "warning: {}: trials {:?} ended with non-finite fitness and are excluded from the statistics",
                        cfg.label(),
                        res.flagged
                    );
                }
                if outputs.summary.is_some() {
                    let s = &res.stats;
                    println!(
                        "{:<28} best {:e}  median {:e}  mean {:e}  worst {:e}  sd {:e}",
                        cfg.label(),
                        s.best,
                        s.median,
                        s.mean,
                        s.worst,
                        s.st_dev
                    );
                }
                results.push(res);
            }
            write_results(&results, &outputs)?;
            if outputs.summary.is_none() {
                write_summary_to(io::stdout().lock(), &results, "<stdout>".as_ref())?;
            }
            Ok(())
        }
    }
}

fn grid_csv(rows: &[[f64; 3]]) -> String {
    let mut s = String::from("x1,x2,f\n");
    for r in rows {
        s.push_str(&format!("{:e},{:e},{:e}\n", r[0], r[1], r[2]));
    }
    s
}

/// Entry point used by the binary; returns the process exit status.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_cli(argv).and_then(|inv| execute(inv).map_err(CliError::from));
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
