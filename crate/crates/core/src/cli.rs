//! Command-line surface.
//!
//! Exit codes: 0 success, 1 theorem violation, 2 input or usage error,
//! 3 geometric domain error.

use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{self, Sampler};
use crate::config::{Configuration, Geometry};
use crate::error::Error;
use crate::io::{self, InputError};
use crate::optimizer::{self, OptimizerOptions, DEFAULT_BUDGET};
use crate::{euclidean, hyperbolic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Values within this fraction of a bin width below a bin edge are counted in
/// the bin above, so angles that sit on an edge up to rounding land on the
/// same side every time.
const BIN_EDGE_SNAP: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "angle-extremes",
    version,
    about = "Minimum angles of n-point configurations"
)]
pub struct Cli {
    /// Worker threads for verify/optimize (default: available parallelism).
    #[arg(long, global = true, env = "ANGLE_EXTREMES_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Euclidean,
    Hyperbolic,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Euclidean => Geometry::PLANE,
            GeometryArg::Hyperbolic => Geometry::Hyperbolic,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Configuration file (JSON).
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest angle over all triples, with its witness.
    MinAngle(InputArg),
    /// Certificate from the extremal-point procedure, as JSON.
    Witness(InputArg),
    /// Write a regular polygon (Euclidean, or inscribed in a hyperbolic disk).
    Ngon {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        geometry: GeometryArg,
        /// Hyperbolic area of the circumscribed disk.
        #[arg(long)]
        area_eps: Option<f64>,
        /// Euclidean circumradius (default 1).
        #[arg(long)]
        circumradius: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte-Carlo check of the π/n bound on random configurations.
    Verify {
        #[arg(long, value_enum)]
        geometry: GeometryArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Hyperbolic radius of the sampling disk.
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
    },
    /// Search for a configuration with the largest minimum angle.
    Optimize {
        #[arg(long, value_enum)]
        geometry: GeometryArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        /// Trace CSV (iteration,best_min_angle,gap).
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Best configuration as a configuration file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram CSV of all triple-angles over [0, π].
    Hist {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        bins: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimum angle of inscribed hyperbolic n-gons across disk areas.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        eps: Vec<f64>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(InputError),
    Domain(Error),
    Output(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Output(_) => EXIT_INPUT,
            CliError::Input(InputError::Domain(_)) | CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Input(_) => EXIT_INPUT,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Input(e) => e.to_string(),
            CliError::Domain(e) => format!("domain error: {e}"),
            CliError::Output(m) => format!("output error: {m}"),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(m) => CliError::Usage(m),
            e => CliError::Domain(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

/// `x` with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        format!("{:.*}", (11 - exp).max(0) as usize, x)
    } else {
        format!("{x:.11e}")
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Runs a parsed command line, writing results to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut (dyn Write + Send)) -> i32 {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads.filter(|&t| t > 0) {
        pool = pool.num_threads(t);
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(cli.command, out)),
        Err(e) => Err(CliError::Usage(e.to_string())),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("angle-extremes: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::MinAngle(a) => cmd_min_angle(&a.input, out),
        Command::Witness(a) => cmd_witness(&a.input, out),
        Command::Ngon {
            n,
            geometry,
            area_eps,
            circumradius,
            out: path,
        } => cmd_ngon(n, geometry, area_eps, circumradius, &path, out),
        Command::Verify {
            geometry,
            n,
            trials,
            seed,
            radius,
        } => cmd_verify(geometry, n, trials, seed, radius, out),
        Command::Optimize {
            geometry,
            n,
            budget,
            seed,
            restarts,
            trace,
            out: path,
        } => cmd_optimize(
            geometry,
            n,
            budget,
            seed,
            restarts,
            trace.as_deref(),
            path.as_deref(),
            out,
        ),
        Command::Hist {
            input,
            bins,
            out: path,
        } => cmd_hist(&input, bins, &path),
        Command::Sweep { n, eps } => {
            let rows = optimizer::scale_sweep(n, &eps)?;
            writeln!(out, "{}", json(&rows))?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_min_angle(input: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let config = io::read_config(input)?;
    let n = config.len();
    let report = analysis::min_angle(&config)?;
    let bound = PI / n as f64;
    let [i, j, k] = report.witness;
    writeln!(out, "geometry = {}, n = {n}", config.geometry())?;
    writeln!(
        out,
        "min_angle = {} ({} deg)",
        sig12(report.min_angle),
        sig12(report.min_angle.to_degrees())
    )?;
    writeln!(out, "witness = ({i}, {j}, {k}), angle at {j}")?;
    writeln!(out, "bound = {} (π/{n})", sig12(bound))?;
    writeln!(out, "triples_scanned = {}", report.total_triples_scanned)?;
    writeln!(
        out,
        "meets_bound = {}",
        report.min_angle <= bound + analysis::EUCLIDEAN_SLACK
    )?;
    Ok(EXIT_OK)
}

fn cmd_witness(input: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let config = io::read_config(input)?;
    let cert = analysis::constructive_witness(&config)?;
    writeln!(out, "{}", json(&cert))?;
    Ok(EXIT_OK)
}

fn cmd_ngon(
    n: usize,
    geometry: GeometryArg,
    area_eps: Option<f64>,
    circumradius: Option<f64>,
    path: &Path,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!("--n must be at least 3, got {n}")));
    }
    let config = match (geometry, area_eps, circumradius) {
        (GeometryArg::Euclidean, Some(_), _) => {
            return Err(CliError::Usage(
                "--area-eps only applies to hyperbolic".into(),
            ))
        }
        (GeometryArg::Hyperbolic, _, Some(_)) => {
            return Err(CliError::Usage(
                "--circumradius only applies to euclidean".into(),
            ))
        }
        (GeometryArg::Hyperbolic, None, None) => {
            return Err(CliError::Usage(
                "hyperbolic polygons need --area-eps".into(),
            ))
        }
        (GeometryArg::Euclidean, None, r) => euclidean::regular_ngon(n, r.unwrap_or(1.0))?,
        (GeometryArg::Hyperbolic, Some(eps), None) => {
            let config = hyperbolic::inscribed_regular_ngon(n, eps)?;
            let validation = hyperbolic::validate_ngon(&config, eps)?;
            writeln!(out, "{}", json(&validation))?;
            config
        }
    };
    io::write_config(path, &config)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    geometry: GeometryArg,
    n: usize,
    trials: usize,
    seed: u64,
    radius: f64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let geometry = Geometry::from(geometry);
    let sampler = match geometry {
        Geometry::Hyperbolic => Sampler::HyperbolicDisk { radius },
        _ => Sampler::UniformCube,
    };
    if n < 3 {
        return Err(CliError::Usage(format!("--n must be at least 3, got {n}")));
    }
    let summary = analysis::verify_theorem(geometry, n, trials, sampler, seed)?;
    writeln!(out, "{}", json(&summary))?;
    Ok(if summary.is_clean() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

#[derive(Serialize)]
struct OptimizeReport<'a> {
    geometry: &'static str,
    n: usize,
    #[serde(flatten)]
    result: &'a optimizer::OptimizerResult,
    best_points: Vec<Vec<f64>>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_optimize(
    geometry: GeometryArg,
    n: usize,
    budget: usize,
    seed: u64,
    restarts: usize,
    trace: Option<&Path>,
    best_out: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!("--n must be at least 3, got {n}")));
    }
    let geometry = Geometry::from(geometry);
    let options = OptimizerOptions {
        restarts,
        ..Default::default()
    };
    let result = optimizer::optimize(geometry, n, budget, seed, &options)?;
    if let Some(path) = trace {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["iteration", "best_min_angle", "gap"])?;
        for e in &result.trace {
            w.write_record([
                e.iteration.to_string(),
                sig12(e.best_min_angle),
                sig12(e.gap),
            ])?;
        }
        w.flush()?;
    }
    if let Some(path) = best_out {
        io::write_config(path, &result.best_config)?;
    }
    let report = OptimizeReport {
        geometry: geometry.name(),
        n,
        best_points: result.best_config.to_point_vecs(),
        result: &result,
    };
    writeln!(out, "{}", json(&report))?;
    Ok(EXIT_OK)
}

/// Counts of all triple-angles in `bins` equal bins over `[0, π]`.
pub fn angle_histogram(config: &Configuration, bins: usize) -> Vec<(f64, f64, usize)> {
    let width = PI / bins as f64;
    let mut counts = vec![0usize; bins];
    analysis::for_each_triple_angle(config, |_, _, _, theta| {
        let idx = (theta / width + BIN_EDGE_SNAP).floor().max(0.0) as usize;
        counts[idx.min(bins - 1)] += 1;
    });
    counts
        .into_iter()
        .enumerate()
        .map(|(i, c)| (i as f64 * width, (i + 1) as f64 * width, c))
        .collect()
}

fn cmd_hist(input: &Path, bins: usize, path: &Path) -> Result<i32, CliError> {
    if bins == 0 {
        return Err(CliError::Usage("--bins must be at least 1".into()));
    }
    let config = io::read_config(input)?;
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["bin_lo", "bin_hi", "count"])?;
    for (lo, hi, count) in angle_histogram(&config, bins) {
        w.write_record([sig12(lo), sig12(hi), count.to_string()])?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}
