//! Comma-separated result files.
//!
//! * summary: `function,dim,algorithm,best,median,mean,worst,st_dev,trials,iters,evals_mean`,
//!   one row per experiment;
//! * trace: `iter,best_fitness`, one row per outer iteration of one trial;
//! * average curve: `iter,average_fitness` across the trials of one experiment;
//! * grid: `x1,x2,f` landscape samples.
//!
//! Reals are written in shortest round-trip scientific notation, so parsing a
//! file recovers the exact values.

use std::fs::{self, File};
use std::io::Write;
use std::path::{Path, PathBuf};

use sta_core::stats::SummaryStats;

use crate::error::HarnessError;
use crate::experiment::ExperimentResult;

pub const SUMMARY_HEADER: [&str; 11] = [
    "function",
    "dim",
    "algorithm",
    "best",
    "median",
    "mean",
    "worst",
    "st_dev",
    "trials",
    "iters",
    "evals_mean",
];

/// Where [`write_results`] puts its files. Unset entries are skipped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputPaths {
    pub summary: Option<PathBuf>,
    pub trace_dir: Option<PathBuf>,
}

/// One parsed summary row.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub function: String,
    pub dim: usize,
    pub algorithm: String,
    pub stats: SummaryStats,
    pub trials: usize,
    pub iters: usize,
    pub evals_mean: f64,
}

pub fn fmt_real(v: f64) -> String {
    format!("{v:e}")
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> HarnessError + '_ {
    move |source| HarnessError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes the summary table for `results` to any writer.
pub fn write_summary_to<W: Write>(out: W, results: &[ExperimentResult], label: &Path) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_HEADER).map_err(csv_err(label))?;
    for r in results {
        let s = &r.stats;
        let c = &r.config;
        w.write_record([
            c.function.name().to_string(),
            c.dim.to_string(),
            c.algorithm.to_string(),
            fmt_real(s.best),
            fmt_real(s.median),
            fmt_real(s.mean),
            fmt_real(s.worst),
            fmt_real(s.st_dev),
            c.trials.to_string(),
            c.max_iters.to_string(),
            fmt_real(r.evals_mean()),
        ])
        .map_err(csv_err(label))?;
    }
    w.flush().map_err(io_err(label))
}

pub fn write_summary(path: &Path, results: &[ExperimentResult]) -> Result<(), HarnessError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(io_err(parent))?;
    }
    let file = File::create(path).map_err(io_err(path))?;
    write_summary_to(file, results, path)
}

fn write_series(path: &Path, header: [&str; 2], values: &[f64]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(header).map_err(csv_err(path))?;
    for (i, v) in values.iter().enumerate() {
        w.write_record([(i + 1).to_string(), fmt_real(*v)]).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

/// Path of the trace file for trial `index` of an experiment.
pub fn trace_path(dir: &Path, result: &ExperimentResult, index: usize) -> PathBuf {
    dir.join(format!("{}_trial{:03}.csv", result.config.label(), index))
}

pub fn average_path(dir: &Path, result: &ExperimentResult) -> PathBuf {
    dir.join(format!("{}_average.csv", result.config.label()))
}

/// One trace file per trial plus the experiment's average curve.
pub fn write_traces(dir: &Path, result: &ExperimentResult) -> Result<(), HarnessError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    for t in &result.trials {
        write_series(&trace_path(dir, result, t.index), ["iter", "best_fitness"], &t.history)?;
    }
    write_series(&average_path(dir, result), ["iter", "average_fitness"], &result.average_curve())
}

pub fn write_results(results: &[ExperimentResult], paths: &OutputPaths) -> Result<(), HarnessError> {
    if let Some(path) = &paths.summary {
        write_summary(path, results)?;
    }
    if let Some(dir) = &paths.trace_dir {
        for r in results {
            write_traces(dir, r)?;
        }
    }
    Ok(())
}

pub fn read_summary(path: &Path) -> Result<Vec<SummaryRow>, HarnessError> {
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let bad = |what: &str| HarnessError::config(format!("{}: malformed `{what}` column", path.display()));
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err(path))?;
        let real = |i: usize| -> Result<f64, HarnessError> {
            rec.get(i).and_then(|v| v.parse().ok()).ok_or_else(|| bad(SUMMARY_HEADER[i]))
        };
        let int = |i: usize| -> Result<usize, HarnessError> {
            rec.get(i).and_then(|v| v.parse().ok()).ok_or_else(|| bad(SUMMARY_HEADER[i]))
        };
        rows.push(SummaryRow {
            function: rec.get(0).ok_or_else(|| bad("function"))?.to_string(),
            dim: int(1)?,
            algorithm: rec.get(2).ok_or_else(|| bad("algorithm"))?.to_string(),
            stats: SummaryStats {
                best: real(3)?,
                median: real(4)?,
                mean: real(5)?,
                worst: real(6)?,
                st_dev: real(7)?,
            },
            trials: int(8)?,
            iters: int(9)?,
            evals_mean: real(10)?,
        });
    }
    Ok(rows)
}

/// Reads a two-column series file (trace or average curve).
pub fn read_series(path: &Path) -> Result<Vec<(usize, f64)>, HarnessError> {
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err(path))?;
    rdr.records()
        .map(|rec| {
            let rec = rec.map_err(csv_err(path))?;
            let it = rec.get(0).and_then(|v| v.parse().ok());
            let val = rec.get(1).and_then(|v| v.parse().ok());
            it.zip(val)
                .ok_or_else(|| HarnessError::config(format!("{}: malformed row", path.display())))
        })
        .collect()
}

/// Landscape samples as `x1,x2,f` rows.
pub fn write_grid(path: &Path, rows: &[[f64; 3]]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err(path))?;
    w.write_record(["x1", "x2", "f"]).map_err(csv_err(path))?;
    for r in rows {
        w.write_record(r.map(fmt_real)).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_err(path))
}
