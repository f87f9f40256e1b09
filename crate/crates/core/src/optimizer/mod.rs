//! Numerical search for configurations maximizing the minimum angle.
//!
//! Each restart anneals single-point Gaussian moves against the exact minimum
//! angle, then polishes with Nelder–Mead on the soft-min surrogate for a
//! rising sequence of `β`, and finishes with a compass search on the exact
//! objective. The best configuration by exact value over all restarts wins.

mod local;
mod softmin;

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{for_each_triple_angle, regularity_score, sample_hyperbolic_disk, trial_rng};
use crate::config::{Configuration, Geometry};
use crate::error::{Error, Result};
use crate::hyperbolic::{self, BOUNDARY_TOLERANCE};

pub use local::{nelder_mead, pattern_search};
pub use softmin::soft_min;

/// Annealing iterations per restart when no budget is given.
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizerOptions {
    pub restarts: usize,
    /// Proposal standard deviation at the first and last annealing step.
    pub sigma_start: f64,
    pub sigma_end: f64,
    /// Metropolis temperature at the first and last annealing step.
    pub temperature_start: f64,
    pub temperature_end: f64,
    /// Soft-min sharpness for the successive Nelder–Mead rounds.
    pub betas: Vec<f64>,
    /// Hyperbolic radius of the disk the hyperbolic starts are drawn from.
    pub hyperbolic_start_radius: f64,
    /// Hyperbolic configurations with a smaller diameter are infeasible.
    /// Below this the angle deficit falls under floating-point resolution.
    pub min_hyperbolic_diameter: f64,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        OptimizerOptions {
            restarts: 16,
            sigma_start: 0.3,
            sigma_end: 1e-4,
            temperature_start: 2e-2,
            temperature_end: 1e-7,
            betas: vec![50.0, 200.0, 1000.0],
            hyperbolic_start_radius: 1.5,
            min_hyperbolic_diameter: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceEntry {
    /// Objective evaluations spent so far in the restart.
    pub iteration: usize,
    pub best_min_angle: f64,
    pub gap: f64,
    /// Diameter of the best configuration in its own metric.
    pub diameter: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizerResult {
    #[serde(skip)]
    pub best_config: Configuration,
    pub best_min_angle: f64,
    /// `π/n`.
    pub target: f64,
    /// `target − best_min_angle`.
    pub gap: f64,
    pub regularity: f64,
    /// Best-so-far trace of the winning restart.
    pub trace: Vec<TraceEntry>,
    pub seed: u64,
    pub restart: usize,
    /// Best exact value reached by each restart.
    pub restart_values: Vec<f64>,
    /// Largest exact minimum angle of any evaluated iterate, across restarts.
    pub max_iterate_min_angle: f64,
    pub evaluations: usize,
}

/// Maps raw search vectors to configurations and keeps the exact best.
struct Evaluator {
    geometry: Geometry,
    n: usize,
    min_diameter: f64,
    target: f64,
    evaluations: usize,
    best: Option<(Vec<f64>, f64)>,
    max_iterate: f64,
    trace: Vec<TraceEntry>,
    angles: Vec<f64>,
}

impl Evaluator {
    fn new(geometry: Geometry, n: usize, options: &OptimizerOptions) -> Self {
        Evaluator {
            geometry,
            n,
            min_diameter: options.min_hyperbolic_diameter,
            target: PI / n as f64,
            evaluations: 0,
            best: None,
            max_iterate: f64::NEG_INFINITY,
            trace: Vec::new(),
            angles: Vec::new(),
        }
    }

    /// Euclidean vectors are moved to centroid 0 and unit RMS radius; the
    /// objective is similarity invariant so this only fixes the gauge.
    fn decode(&self, x: &[f64]) -> Option<Configuration> {
        let mut coords = x.to_vec();
        match self.geometry {
            Geometry::Euclidean { dim } => {
                let n = self.n as f64;
                for axis in 0..dim {
                    let mean = coords.iter().skip(axis).step_by(dim).sum::<f64>() / n;
                    coords
                        .iter_mut()
                        .skip(axis)
                        .step_by(dim)
                        .for_each(|c| *c -= mean);
                }
                let rms = (coords.iter().map(|c| c * c).sum::<f64>() / n).sqrt();
                if !(rms > 0.0 && rms.is_finite()) {
                    return None;
                }
                coords.iter_mut().for_each(|c| *c /= rms);
                Configuration::from_flat(self.geometry, coords).ok()
            }
            Geometry::Hyperbolic => {
                if coords
                    .chunks_exact(2)
                    .map(|p| p[0].hypot(p[1]))
                    .any(|r| r.is_nan() || r > 1.0 - BOUNDARY_TOLERANCE)
                {
                    return None;
                }
                let config = Configuration::from_flat(self.geometry, coords).ok()?;
                (config.diameter() >= self.min_diameter).then_some(config)
            }
        }
    }

    /// Exact minimum and, when `beta` is given, the soft-min surrogate.
    /// `None` for infeasible points.
    fn evaluate(&mut self, x: &[f64], beta: Option<f64>) -> Option<(f64, f64, Vec<f64>)> {
        self.evaluations += 1;
        let config = self.decode(x)?;
        self.angles.clear();
        let angles = &mut self.angles;
        for_each_triple_angle(&config, |_, _, _, t| angles.push(t));
        let exact = self.angles.iter().copied().fold(f64::INFINITY, f64::min);
        let soft = beta.map_or(exact, |b| soft_min(&self.angles, b));
        self.max_iterate = self.max_iterate.max(exact);
        let coords = config.into_coords();
        if self.best.as_ref().is_none_or(|(_, b)| exact > *b) {
            let probe = Configuration::from_flat(self.geometry, coords.clone())
                .expect("decoded configuration is valid");
            self.trace.push(TraceEntry {
                iteration: self.evaluations,
                best_min_angle: exact,
                gap: self.target - exact,
                diameter: probe.diameter(),
            });
            self.best = Some((coords.clone(), exact));
        }
        Some((exact, soft, coords))
    }
}

struct RestartOutcome {
    coords: Vec<f64>,
    value: f64,
    trace: Vec<TraceEntry>,
    max_iterate: f64,
    evaluations: usize,
}

fn initial_point<R: Rng>(
    rng: &mut R,
    geometry: Geometry,
    n: usize,
    options: &OptimizerOptions,
) -> Vec<f64> {
    match geometry {
        Geometry::Euclidean { dim } => (0..n * dim).map(|_| rng.random_range(-1.0..1.0)).collect(),
        Geometry::Hyperbolic => (0..n)
            .flat_map(|_| sample_hyperbolic_disk(rng, options.hyperbolic_start_radius))
            .collect(),
    }
}

fn run_restart(
    geometry: Geometry,
    n: usize,
    budget: usize,
    seed: u64,
    restart: usize,
    options: &OptimizerOptions,
) -> RestartOutcome {
    let mut rng = trial_rng(seed, restart as u64);
    let mut eval = Evaluator::new(geometry, n, options);
    let dim = geometry.dim();

    let mut current = loop {
        let x = initial_point(&mut rng, geometry, n, options);
        if let Some((value, _, coords)) = eval.evaluate(&x, None) {
            break (coords, value);
        }
    };

    // simulated annealing on the exact objective
    let steps = budget.max(1);
    for t in 0..steps {
        let frac = if steps > 1 {
            t as f64 / (steps - 1) as f64
        } else {
            1.0
        };
        let sigma = options.sigma_start * (options.sigma_end / options.sigma_start).powf(frac);
        let temp = options.temperature_start
            * (options.temperature_end / options.temperature_start).powf(frac);
        let i = rng.random_range(0..n);
        let mut x = current.0.clone();
        for c in &mut x[i * dim..(i + 1) * dim] {
            let z: f64 = StandardNormal.sample(&mut rng);
            *c += sigma * z;
        }
        let u: f64 = rng.random();
        if let Some((value, _, coords)) = eval.evaluate(&x, None) {
            let delta = value - current.1;
            if delta >= 0.0 || u < (delta / temp).exp() {
                current = (coords, value);
            }
        }
    }

    // surrogate polish with increasing sharpness
    let rounds = options.betas.len().max(1);
    let per_round = (budget / (2 * rounds)).max(4 * n * dim);
    let mut step = 1e-2;
    for &beta in &options.betas {
        let start = eval.best.as_ref().expect("start was feasible").0.clone();
        nelder_mead(
            |x| match eval.evaluate(x, Some(beta)) {
                Some((_, soft, _)) => -soft,
                None => f64::INFINITY,
            },
            &start,
            step,
            per_round,
        );
        step *= 0.3;
    }

    // exact finish
    let start = eval.best.as_ref().expect("start was feasible").0.clone();
    pattern_search(
        |x| match eval.evaluate(x, None) {
            Some((exact, _, _)) => -exact,
            None => f64::INFINITY,
        },
        &start,
        1e-3,
        1e-10,
        (budget / 2).max(8 * n * dim),
    );

    let (coords, value) = eval.best.take().expect("at least one feasible point");
    RestartOutcome {
        coords,
        value,
        trace: eval.trace,
        max_iterate: eval.max_iterate,
        evaluations: eval.evaluations,
    }
}

/// Searches for an `n`-point configuration with the largest minimum angle.
///
/// `budget` is the number of annealing steps per restart; the polishing phases
/// get budgets proportional to it. Deterministic for a given seed regardless
/// of how restarts are scheduled across threads.
pub fn optimize(
    geometry: Geometry,
    n: usize,
    budget: usize,
    seed: u64,
    options: &OptimizerOptions,
) -> Result<OptimizerResult> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    if options.restarts == 0 {
        return Err(Error::InvalidParameter(
            "restarts must be at least 1".into(),
        ));
    }
    if !geometry.is_planar() {
        return Err(Error::WrongGeometry {
            expected: "planar (euclidean-2 or hyperbolic)",
        });
    }

    let outcomes: Vec<RestartOutcome> = (0..options.restarts)
        .into_par_iter()
        .map(|r| run_restart(geometry, n, budget, seed, r, options))
        .collect();

    let mut winner = 0;
    for (r, o) in outcomes.iter().enumerate() {
        if o.value > outcomes[winner].value {
            winner = r;
        }
    }
    let restart_values = outcomes.iter().map(|o| o.value).collect();
    let max_iterate_min_angle = outcomes
        .iter()
        .map(|o| o.max_iterate)
        .fold(f64::NEG_INFINITY, f64::max);
    let evaluations = outcomes.iter().map(|o| o.evaluations).sum();
    let best = outcomes.into_iter().nth(winner).expect("winner exists");

    let best_config = Configuration::from_flat(geometry, best.coords)?;
    let target = PI / n as f64;
    Ok(OptimizerResult {
        regularity: regularity_score(&best_config)?,
        best_config,
        best_min_angle: best.value,
        target,
        gap: target - best.value,
        trace: best.trace,
        seed,
        restart: winner,
        restart_values,
        max_iterate_min_angle,
        evaluations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub epsilon: f64,
    pub min_angle: f64,
    pub gap: f64,
}

/// Minimum angle of the inscribed regular `n`-gon for each disk area `ε`.
pub fn scale_sweep(n: usize, epsilons: &[f64]) -> Result<Vec<SweepRow>> {
    epsilons
        .iter()
        .map(|&epsilon| {
            let config = hyperbolic::inscribed_regular_ngon(n, epsilon)?;
            let min_angle = crate::analysis::min_angle(&config)?.min_angle;
            Ok(SweepRow {
                epsilon,
                min_angle,
                gap: PI / n as f64 - min_angle,
            })
        })
        .collect()
}
