//! Acceptance suite: one PASS/FAIL line per criterion, with the individual
//! checks listed underneath. Exits non-zero if any criterion fails.

use std::cell::Cell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fs;
use std::path::Path;

use sta_bench::cli::main_with_args;
use sta_bench::config::{Algorithm, ExperimentConfig};
use sta_bench::experiment::{run_experiment, ExperimentResult};
use sta_core::baseline::random_optimization_run;
use sta_core::benchmarks::{Benchmark, BenchmarkKind};
use sta_core::crossover::{
    crossover_arithmetical, crossover_linear, crossover_proposed, crossover_sbx, sbx_sample_beta, CrossoverKind,
};
use sta_core::operators::{
    axes_candidates, expand_candidates, greedy_select, rotate_candidates, translate_candidates, CandidateSet,
};
use sta_core::stai::{sta1_run, AlphaSchedule, StaI};
use sta_core::staii::{sta2_run, StaIIConfig};
use sta_core::{
    sample_uniform_in_bounds, BoundsPolicy, BoxBounds, EvalCounter, EvaluatedState, Objective,
    RngStream, StaParams, StateVector,
};

const CASES: u64 = 1000;

type Rule = (BenchmarkKind, &'static str, fn(&ExperimentResult) -> bool);
type Cache = HashMap<&'static str, ExperimentResult>;
type Runner = Box<dyn FnOnce(&mut Cache) -> Criterion>;

#[derive(Default)]
struct Criterion {
    checks: Vec<(bool, String)>,
}

impl Criterion {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks.push((ok, what.into()));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(ok, _)| *ok)
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn diff(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn random_state(rng: &mut RngStream, n: usize, scale: f64) -> StateVector {
    (0..n).map(|_| scale * rng.uniform_sym()).collect()
}

/// Objective wrapper that counts calls independently of `EvalCounter`.
struct Counting<O> {
    inner: O,
    calls: Cell<u64>,
}

impl<O: Objective> Objective for Counting<O> {
    fn name(&self) -> &str {
        self.inner.name()
    }
    fn bounds(&self) -> &BoxBounds {
        self.inner.bounds()
    }
    fn value(&self, x: &[f64]) -> f64 {
        self.calls.set(self.calls.get() + 1);
        self.inner.value(x)
    }
}

fn counting(kind: BenchmarkKind, dim: usize) -> Counting<Benchmark> {
    Counting {
        inner: Benchmark::new(kind, dim).unwrap(),
        calls: Cell::new(0),
    }
}

// 1. Property suite.
fn criterion_properties() -> Criterion {
    let mut c = Criterion::default();

    // Rotation step bound.
    let mut worst_ratio: f64 = 0.0;
    for seed in 0..CASES {
        let mut rng = RngStream::new(seed);
        let n = 1 + rng.index(10);
        let x = random_state(&mut rng, n, 100.0);
        let alpha = rng.uniform_in(1e-4, 2.0);
        for cand in &rotate_candidates(&x, alpha, 10, &mut rng) {
            worst_ratio = worst_ratio.max(norm(&diff(cand, &x)) / alpha);
        }
    }
    c.check(worst_ratio <= 1.0, format!("rotation |dx| <= alpha over {CASES} cases (max ratio {worst_ratio:.4})"));

    // Translation: collinear with the old->new direction, within beta.
    let (mut max_resid, mut max_ratio): (f64, f64) = (0.0, 0.0);
    for seed in 0..CASES {
        let mut rng = RngStream::new(10_000 + seed);
        let n = 1 + rng.index(10);
        let old = random_state(&mut rng, n, 10.0);
        let new = random_state(&mut rng, n, 10.0);
        let beta = rng.uniform_in(0.01, 3.0);
        let d = diff(&new, &old);
        let dn = norm(&d);
        let unit: Vec<f64> = d.iter().map(|v| v / dn).collect();
        for cand in &translate_candidates(&new, &old, beta, 10, &mut rng).unwrap() {
            let step = diff(cand, &new);
            let t: f64 = step.iter().zip(&unit).map(|(a, b)| a * b).sum();
            let resid = norm(&step.iter().zip(&unit).map(|(s, u)| s - t * u).collect::<Vec<_>>());
            max_resid = max_resid.max(resid);
            max_ratio = max_ratio.max(norm(&step) / beta);
            if t < -1e-12 {
                max_resid = f64::INFINITY;
            }
        }
    }
    c.check(max_resid < 1e-12, format!("translation collinear (max residual {max_resid:.2e})"));
    c.check(max_ratio <= 1.0 + 1e-12, format!("translation |dx| <= beta (max ratio {max_ratio:.4})"));

    // Axesion changes at most one coordinate; expansion and axesion fix zeros.
    let mut axes_ok = true;
    let mut zero_ok = true;
    for seed in 0..CASES {
        let mut rng = RngStream::new(20_000 + seed);
        let n = 1 + rng.index(10);
        let mut x = random_state(&mut rng, n, 50.0);
        let zero_at = rng.index(n);
        x[zero_at] = 0.0;
        for cand in &axes_candidates(&x, 1.0, 10, &mut rng) {
            axes_ok &= cand.iter().zip(x.iter()).filter(|(a, b)| a != b).count() <= 1;
            zero_ok &= cand[zero_at] == 0.0;
        }
        for cand in &expand_candidates(&x, 1.0, 10, &mut rng) {
            zero_ok &= cand[zero_at] == 0.0;
        }
    }
    c.check(axes_ok, "axesion changes at most one coordinate");
    c.check(zero_ok, "expansion and axesion keep zero coordinates at zero");

    // Greedy selection never worsens the incumbent.
    let sphere = Benchmark::new(BenchmarkKind::Sphere, 3).unwrap();
    let mut greedy_ok = true;
    for seed in 0..CASES {
        let mut rng = RngStream::new(30_000 + seed);
        let inc_x = random_state(&mut rng, 3, 5.0);
        let inc_f = sphere.value(&inc_x);
        let cands = CandidateSet::new((0..8).map(|_| random_state(&mut rng, 3, 5.0)).collect());
        let (out, _) =
            greedy_select(&sphere, EvaluatedState::new(inc_x, inc_f), &cands, &mut EvalCounter::new()).unwrap();
        greedy_ok &= out.fitness <= inc_f;
    }
    // Whole runs are monotone too.
    for seed in 0..CASES / 10 {
        let run = sta1_run(&sphere, &StaParams { se: 5, ..StaParams::default() }, 20, seed, BoundsPolicy::Clip).unwrap();
        greedy_ok &= run.history.windows(2).all(|w| w[1] <= w[0]);
    }
    c.check(greedy_ok, "greedy selection and run histories are monotone");

    // Alpha schedule period.
    let mut s = AlphaSchedule::new(&StaParams::default());
    let used: Vec<f64> = (0..1400)
        .map(|_| {
            let a = s.begin_iteration();
            s.end_iteration();
            a
        })
        .collect();
    let period_ok = used.iter().enumerate().all(|(i, &a)| a == used[i % 14])
        && used[..14].windows(2).all(|w| w[1] < w[0])
        && used[14] == 1.0
        && used.iter().all(|&a| a >= 1e-4);
    c.check(period_ok, "alpha schedule (1, 1e-4, fc 2) has period 14 and never goes below alpha_min");

    // Crossover identities.
    let mut fixed_ok = true;
    let mut sum_ok = true;
    let mut member_ok = true;
    for seed in 0..CASES {
        let mut rng = RngStream::new(40_000 + seed);
        let n = 1 + rng.index(10);
        let x1 = random_state(&mut rng, n, 100.0);
        let x2 = random_state(&mut rng, n, 100.0);
        for kind in [
            CrossoverKind::Proposed,
            CrossoverKind::Arithmetical { alpha_c: rng.uniform01() },
            CrossoverKind::Linear,
            CrossoverKind::Sbx { eta_c: rng.uniform_in(0.5, 20.0) },
        ] {
            fixed_ok &= kind.offspring(&x1, &x1, &mut rng).unwrap().iter().all(|y| *y == x1);
        }
        let ac = rng.uniform01();
        let (a, b) = crossover_arithmetical(&x1, &x2, ac).unwrap();
        let (s1, s2) = crossover_sbx(&x1, &x2, 2.0, &mut rng).unwrap();
        for i in 0..n {
            let tol = 1e-12 * (1.0 + x1[i].abs() + x2[i].abs() + s1[i].abs() + s2[i].abs());
            sum_ok &= (a[i] + b[i] - x1[i] - x2[i]).abs() <= tol;
            sum_ok &= (s1[i] + s2[i] - x1[i] - x2[i]).abs() <= tol;
        }
        let (p1, p2) = crossover_proposed(&x1, &x2, &mut rng).unwrap();
        for i in 0..n {
            member_ok &= (p1[i] == x1[i] || p1[i] == x2[i]) && (p2[i] == x1[i] || p2[i] == x2[i]);
        }
        let (l1, l2, l3) = crossover_linear(&x1, &x2).unwrap();
        for i in 0..n {
            sum_ok &= ((l1[i] + l2[i] + l3[i]) / 3.0 - (x1[i] + x2[i]) / 2.0).abs() <= 1e-12 * (1.0 + x1[i].abs() + x2[i].abs());
        }
    }
    c.check(fixed_ok, "identical parents are a fixed point of every crossover");
    c.check(sum_ok, "arithmetical and SBX conserve the parent sum; linear offspring average to the midpoint");
    c.check(member_ok, "proposed crossover components come from the parents");

    // SBX spread factor distribution: histogram bin masses against the
    // integrated density, eta_c = 2, 1e5 draws.
    let eta = 2.0f64;
    let cdf = |b: f64| {
        if b <= 1.0 {
            0.5 * b.powf(eta + 1.0)
        } else {
            1.0 - 0.5 * b.powf(-(eta + 1.0))
        }
    };
    let draws = 100_000;
    let width = 0.05;
    let nbins = 60; // [0, 3]; the tail beyond is one more bin
    let mut hist = vec![0usize; nbins + 1];
    let mut rng = RngStream::new(50_000);
    for _ in 0..draws {
        let b = sbx_sample_beta(eta, &mut rng);
        hist[((b / width) as usize).min(nbins)] += 1;
    }
    let mut sup: f64 = 0.0;
    let mut cdf_sup: f64 = 0.0;
    let mut cum = 0usize;
    for (k, &h) in hist.iter().enumerate() {
        let lo = k as f64 * width;
        let mass = if k == nbins { 1.0 - cdf(lo) } else { cdf(lo + width) - cdf(lo) };
        sup = sup.max((h as f64 / draws as f64 - mass).abs());
        cum += h;
        if k < nbins {
            cdf_sup = cdf_sup.max((cum as f64 / draws as f64 - cdf(lo + width)).abs());
        }
    }
    // Density shape on [0, 1] relative to 1.5 b^2, normalized by the bin mass.
    c.check(
        sup <= 0.02 && cdf_sup <= 0.02,
        format!("SBX beta histogram vs density: bin sup-norm {sup:.2e}, CDF sup-norm {cdf_sup:.2e} (tol 0.02)"),
    );

    // Evaluation budget accounting against an independent call counter.
    let mut budget_ok = true;
    for seed in 0..20 {
        let obj = counting(BenchmarkKind::Rastrigin, 4);
        let p = StaParams { se: 6, ..StaParams::default() };
        let mut run = StaI::new(&obj, p, seed, BoundsPolicy::Clip).unwrap();
        let mut predicted = 1u64;
        for _ in 0..30 {
            let r = run.step().unwrap();
            predicted += r.improved.iter().map(|&u| if u { 12 } else { 6 }).sum::<u64>();
        }
        budget_ok &= run.evaluations() == predicted && obj.calls.get() == predicted;

        let obj = counting(BenchmarkKind::Griewank, 3);
        let cfg = StaIIConfig { sn: 5, cf: 4, ..StaIIConfig::default() };
        let rec = sta2_run(&obj, &cfg, 12, seed, BoundsPolicy::Clip).unwrap();
        let lo = 5 + 12 * 5 * 30 + 3 * 20;
        let hi = 5 + 12 * 5 * 60 + 3 * 20;
        budget_ok &= rec.evaluations == obj.calls.get() && (lo..=hi).contains(&rec.evaluations);

        let obj = counting(BenchmarkKind::Sphere, 2);
        let rec = random_optimization_run(&obj, 77, 1.0, seed, BoundsPolicy::Clip).unwrap();
        budget_ok &= rec.evaluations == 78 && obj.calls.get() == 78;
    }
    c.check(budget_ok, "evaluation counts match an independent call counter and the round-cost formula");
    c
}

// 2. Benchmark catalog.
fn criterion_catalog() -> Criterion {
    let mut c = Criterion::default();
    for kind in BenchmarkKind::ALL {
        for dim in [2usize, 10] {
            if !kind.supports_dim(dim) {
                continue;
            }
            let b = Benchmark::new(kind, dim).unwrap();
            let x = b.known_argmin().unwrap();
            let f = b.value(&x);
            let (target, tol) = match kind {
                BenchmarkKind::Michalewicz => (if dim == 2 { -1.8013 } else { -9.6602 }, 1e-4),
                _ => (b.known_min().unwrap(), 1e-9),
            };
            c.check((f - target).abs() <= tol, format!("{kind} {dim}D: f(x*) = {f:.12e}, known {target} (tol {tol:e})"));
        }
    }
    let easom = Benchmark::new(BenchmarkKind::Easom, 2).unwrap();
    c.check(easom.value(&[PI, PI]) == -1.0, "easom(pi, pi) = -1");
    c
}

fn run(algo: Algorithm, kind: BenchmarkKind, dim: usize) -> ExperimentResult {
    run_experiment(&ExperimentConfig::new(algo, kind, dim)).expect("experiment runs")
}

fn describe(r: &ExperimentResult) -> String {
    let s = &r.stats;
    format!(
        "{} best {:.6e} median {:.6e} mean {:.6e} worst {:.6e}",
        r.config.label(),
        s.best,
        s.median,
        s.mean,
        s.worst
    )
}

// 3. Two-dimensional reproduction.
fn criterion_2d() -> Criterion {
    let mut c = Criterion::default();
    for algo in [Algorithm::Sta1, Algorithm::Sta2] {
        let checks: [Rule; 8] = [
            (BenchmarkKind::Schwefel, "|mean + 837.9658| <= 1e-3", |r| (r.stats.mean + 837.9658).abs() <= 1e-3),
            (BenchmarkKind::Easom, "|mean + 1| <= 1e-6", |r| (r.stats.mean + 1.0).abs() <= 1e-6),
            (BenchmarkKind::GoldsteinPrice, "|mean - 3| <= 1e-6", |r| (r.stats.mean - 3.0).abs() <= 1e-6),
            (BenchmarkKind::Schaffer, "mean <= 1e-8", |r| r.stats.mean <= 1e-8),
            (BenchmarkKind::Rastrigin, "mean <= 1e-8", |r| r.stats.mean <= 1e-8),
            (BenchmarkKind::Griewank, "mean <= 1e-8", |r| r.stats.mean <= 1e-8),
            (BenchmarkKind::Sphere, "median <= 1e-50", |r| r.stats.median <= 1e-50),
            (BenchmarkKind::Rosenbrock, "median <= 1e-8", |r| r.stats.median <= 1e-8),
        ];
        for (kind, rule, pred) in checks {
            let r = run(algo, kind, 2);
            c.check(pred(&r) && r.flagged.is_empty(), format!("{rule}: {}", describe(&r)));
        }
    }
    c
}

// 4. Ten-dimensional reproduction with the population engine; the Griewank
// result is reused by criterion 5.
fn criterion_10d(cache: &mut Cache) -> Criterion {
    let mut c = Criterion::default();
    let checks: [Rule; 7] = [
        (BenchmarkKind::Sphere, "median <= 1e-50", |r| r.stats.median <= 1e-50),
        (BenchmarkKind::Rastrigin, "mean <= 1e-8", |r| r.stats.mean <= 1e-8),
        (BenchmarkKind::Griewank, "mean <= 1e-8", |r| r.stats.mean <= 1e-8),
        (BenchmarkKind::Ackley, "worst <= 1e-12", |r| r.stats.worst <= 1e-12),
        (BenchmarkKind::Schwefel, "|mean + 4189.8| <= 0.01", |r| (r.stats.mean + 4189.8).abs() <= 0.01),
        (BenchmarkKind::Michalewicz, "|median + 9.6602| <= 1e-3", |r| (r.stats.median + 9.6602).abs() <= 1e-3),
        (BenchmarkKind::Rosenbrock, "median <= 5", |r| r.stats.median <= 5.0),
    ];
    for (kind, rule, pred) in checks {
        let r = run(Algorithm::Sta2, kind, 10);
        c.check(pred(&r) && r.flagged.is_empty(), format!("{rule}: {}", describe(&r)));
        if kind == BenchmarkKind::Griewank {
            cache.insert("griewank_sta2", r);
        }
    }
    c
}

// 5. Population engine beats the individual engine on Griewank 10D.
fn criterion_differentiation(cache: &mut Cache) -> Criterion {
    let mut c = Criterion::default();
    let sta2 = cache
        .remove("griewank_sta2")
        .unwrap_or_else(|| run(Algorithm::Sta2, BenchmarkKind::Griewank, 10));
    let sta1 = run(Algorithm::Sta1, BenchmarkKind::Griewank, 10);
    c.check(
        sta2.stats.mean <= sta1.stats.mean,
        format!("sta2 mean {:.6e} <= sta1 mean {:.6e}", sta2.stats.mean, sta1.stats.mean),
    );
    c
}

fn read_dir_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    files.sort();
    files
}

// 6. Determinism of written outputs, exercised through the CLI.
fn criterion_determinism() -> Criterion {
    let mut c = Criterion::default();
    let tmp = tempfile::tempdir().unwrap();
    let invocations: [&[&str]; 3] = [
        &["--algo", "sta1", "--fn", "schwefel", "--dim", "2", "--seed", "11"],
        &["--algo", "sta2", "--fn", "rastrigin", "--dim", "10", "--trials", "4", "--iters", "150", "--cf", "25", "--seed", "3"],
        &["--algo", "ro", "--fn", "ackley", "--dim", "5", "--trials", "6", "--iters", "300"],
    ];
    for (k, args) in invocations.iter().enumerate() {
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let dir = tmp.path().join(format!("inv{k}_rep{rep}"));
            let summary = dir.join("summary.csv");
            let traces = dir.join("traces");
            let mut argv: Vec<String> = vec!["sta".into()];
            argv.extend(args.iter().map(|s| s.to_string()));
            argv.extend(["--out".into(), summary.display().to_string(), "--trace".into(), traces.display().to_string()]);
            let code = main_with_args(argv);
            c.check(code == 0, format!("`sta {}` exits 0 (run {})", args.join(" "), rep + 1));
            outputs.push((fs::read(&summary).unwrap_or_default(), read_dir_bytes(&traces)));
        }
        let same = outputs[0] == outputs[1];
        let ntraces = outputs[0].1.len();
        c.check(
            same && !outputs[0].0.is_empty() && ntraces > 1,
            format!("`sta {}`: summary and {ntraces} trace files byte-identical across runs", args.join(" ")),
        );
    }
    c
}

// 7. Random-optimization baseline.
fn criterion_baseline() -> Criterion {
    let mut c = Criterion::default();
    let sphere = Benchmark::new(BenchmarkKind::Sphere, 2).unwrap();
    let mut improved = 0;
    let mut monotone = true;
    for trial in 0..30 {
        let seed = sta_core::trial_seed(0, trial);
        // The run's first draws are its initial state; replay them.
        let x0 = sample_uniform_in_bounds(sphere.bounds(), &mut RngStream::new(seed));
        let f0 = sphere.value(&x0);
        let run = random_optimization_run(&sphere, 1000, 1.0, seed, BoundsPolicy::Clip).unwrap();
        improved += (run.best.fitness < f0) as usize;
        monotone &= run.history.windows(2).all(|w| w[1] <= w[0]) && run.history[0] <= f0;
    }
    c.check(improved >= 29, format!("improved initial fitness in {improved}/30 trials (need >= 29)"));
    c.check(monotone, "best-so-far never increases");
    c
}

fn main() {
    let mut cache = HashMap::new();
    let criteria: Vec<(&str, Runner)> = vec![
        ("1 property suite", Box::new(|_| criterion_properties())),
        ("2 benchmark catalog", Box::new(|_| criterion_catalog())),
        ("3 2D reproduction (sta1, sta2)", Box::new(|_| criterion_2d())),
        ("4 10D reproduction (sta2)", Box::new(criterion_10d)),
        ("5 10D sta1 vs sta2 on griewank", Box::new(criterion_differentiation)),
        ("6 determinism", Box::new(|_| criterion_determinism())),
        ("7 baseline sanity", Box::new(|_| criterion_baseline())),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let c = f(&mut cache);
        let ok = c.passed();
        failed += (!ok) as usize;
        println!("[{}] criterion {name}", if ok { "PASS" } else { "FAIL" });
        for (ok, what) in &c.checks {
            println!("       {} {what}", if *ok { "ok  " } else { "FAIL" });
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
