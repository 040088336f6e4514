//! Command-line front end: `certify`, `solve` and `gauge-check`.
//!
//! Exit codes are the only contract on the standard streams. Structured
//! output goes to files under the output directory, except `gauge-check`,
//! which prints its report.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::config::{Run, RunConfig};
use crate::contraction::{certify, SamplerSpec};
use crate::error::{Error, Result};
use crate::gauge::{check_class, GaugeClass, GaugeFn, ProbeConfig};
use crate::metric::Point;
use crate::solver::{multistart_uniqueness_probe, SelectionStrategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "weak-contraction",
    version,
    about = "Certify contraction conditions and compute common end points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the contraction condition on sampled pairs and write a report.
    Certify {
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Run the alternating iteration from each start and verify end points.
    Solve {
        config: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Run a class verifier on a gauge given as JSON (or a JSON file).
    GaugeCheck {
        gauge: String,
        #[arg(long, value_parser = parse_class)]
        class: GaugeClass,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Overrides {
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "max-iter")]
    max_iter: Option<usize>,
    #[arg(long)]
    strategy: Option<String>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_class(s: &str) -> std::result::Result<GaugeClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Certify { config, overrides } => cmd_certify(&config, &overrides),
        Command::Solve { config, overrides } => cmd_solve(&config, &overrides),
        Command::GaugeCheck { gauge, class, out } => cmd_gauge_check(&gauge, class, out.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn load_run(path: &Path, o: &Overrides) -> Result<Run> {
    let mut cfg = RunConfig::load(path)?;
    if let Some(seed) = o.seed {
        cfg.solver.seed = seed;
        if let SamplerSpec::Random { seed: s, .. } = &mut cfg.sampler {
            *s = seed;
        }
    }
    if let Some(strategy) = &o.strategy {
        cfg.solver.strategy = strategy.clone();
    }
    if let Some(max_iter) = o.max_iter {
        cfg.solver.max_iter = max_iter;
    }
    if let Some(dir) = &o.out {
        cfg.output.dir = dir.clone();
    }
    cfg.build()
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Config(e.to_string()))?;
    write_file(path, &(text + "\n"))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| Error::Config(format!("cannot create {}: {e}", parent.display())))?;
    }
    fs::write(path, text).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

fn cmd_certify(config: &Path, o: &Overrides) -> Result<i32> {
    let mut run = load_run(config, o)?;
    if let Some(tol) = o.tol {
        run.certify.tol = tol;
    }
    let report = certify(&run.pair, &run.gauges, &run.domain, &run.sampler, &run.certify)?;
    write_json(&run.output.dir.join(&run.output.report), &report)?;
    Ok(if report.certified() { EXIT_OK } else { EXIT_VIOLATED })
}

#[derive(Serialize)]
struct RunSummary<'a> {
    x0: &'a Point,
    point: &'a Point,
    delta_t: f64,
    delta_s: f64,
    is_endpoint: bool,
    converged: bool,
    iterations_used: usize,
    tail_bound: Option<f64>,
}

#[derive(Serialize)]
struct SolveReport<'a> {
    strategy: SelectionStrategy,
    tol: f64,
    max_iter: usize,
    endpoints: &'a [Point],
    unique: bool,
    failed_starts: &'a [Point],
    runs: Vec<RunSummary<'a>>,
}

fn cmd_solve(config: &Path, o: &Overrides) -> Result<i32> {
    let mut run = load_run(config, o)?;
    if let Some(tol) = o.tol {
        if !(tol > 0.0) {
            return Err(Error::Config("--tol must be > 0".into()));
        }
        run.solve.tol = tol;
    }
    if run.starts.is_empty() {
        return Err(Error::Config("solver.x0 must list at least one start".into()));
    }
    let result = multistart_uniqueness_probe(&run.pair, &run.gauges, &run.starts, &run.solve)?;
    let dir = &run.output.dir;
    for (i, r) in result.runs.iter().enumerate() {
        let trace = r.trace.as_ref().expect("solve keeps the trace");
        let name = if result.runs.len() == 1 {
            run.output.trace.clone()
        } else {
            indexed_name(&run.output.trace, i)
        };
        write_file(&dir.join(name), &trace.to_csv_string())?;
    }
    let report = SolveReport {
        strategy: run.solve.strategy,
        tol: run.solve.tol,
        max_iter: run.solve.max_iter,
        endpoints: &result.endpoints,
        unique: result.unique,
        failed_starts: &result.failed_starts,
        runs: run
            .starts
            .iter()
            .zip(&result.runs)
            .map(|(x0, r)| {
                let trace = r.trace.as_ref().unwrap();
                RunSummary {
                    x0,
                    point: &r.point,
                    delta_t: r.delta_t,
                    delta_s: r.delta_s,
                    is_endpoint: r.is_endpoint,
                    converged: trace.converged,
                    iterations_used: trace.iterations_used,
                    tail_bound: r.tail_bound,
                }
            })
            .collect(),
    };
    write_json(&dir.join(&run.output.result), &report)?;
    Ok(if result.failed_starts.is_empty() {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    })
}

/// `trace.csv` -> `trace-3.csv`
fn indexed_name(name: &str, i: usize) -> String {
    match name.rsplit_once('.') {
        Some((stem, ext)) => format!("{stem}-{i}.{ext}"),
        None => format!("{name}-{i}"),
    }
}

fn cmd_gauge_check(spec: &str, class: GaugeClass, out: Option<&Path>) -> Result<i32> {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        fs::read_to_string(spec).map_err(|e| Error::Config(format!("cannot read gauge spec {spec}: {e}")))?
    };
    let gauge: GaugeFn = serde_json::from_str(&text).map_err(|e| Error::Config(format!("bad gauge spec: {e}")))?;
    let report = check_class(&gauge, class, &ProbeConfig::default())?;
    let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Config(e.to_string()))?;
    println!("{json}");
    if let Some(path) = out {
        write_file(path, &(json + "\n"))?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATED })
}
