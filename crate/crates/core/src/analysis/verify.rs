//! Seeded Monte-Carlo check of the `π/n` bound.
//!
//! Every trial draws from its own ChaCha stream keyed by `(seed, trial)`, so
//! the summary does not depend on how trials are spread over threads.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Configuration, Geometry};
use crate::error::{Error, Result};

use super::{constructive_witness, min_angle, within_bound, Branch};

/// Absolute slack on Euclidean `≤ π/n` comparisons.
pub const EUCLIDEAN_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Sampler {
    /// i.i.d. uniform in `[0, 1]^d`.
    UniformCube,
    /// i.i.d. uniform with respect to hyperbolic area in the origin-centred
    /// disk of the given hyperbolic radius.
    HyperbolicDisk { radius: f64 },
}

impl Sampler {
    pub fn default_for(geometry: Geometry) -> Self {
        match geometry {
            Geometry::Euclidean { .. } => Sampler::UniformCube,
            Geometry::Hyperbolic => Sampler::HyperbolicDisk { radius: 1.0 },
        }
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// One point uniform in hyperbolic area inside the disk of hyperbolic radius
/// `radius`, returned in Poincaré coordinates.
///
/// The area inside radius `r` is `2π(cosh r − 1)`, so `r` is drawn by
/// inverting that CDF and mapped to Euclidean radius `tanh(r/2)`.
pub fn sample_hyperbolic_disk<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> [f64; 2] {
    let u: f64 = rng.random();
    let s = (radius / 2.0).sinh();
    // cosh r − 1 = u (cosh R − 1), with cosh x − 1 = 2 sinh²(x/2)
    let half = (u.sqrt() * s).asinh();
    let rho = half.tanh();
    let phi = TAU * rng.random::<f64>();
    [rho * phi.cos(), rho * phi.sin()]
}

pub fn sample_configuration<R: Rng + ?Sized>(
    rng: &mut R,
    geometry: Geometry,
    n: usize,
    sampler: Sampler,
) -> Result<Configuration> {
    let d = geometry.dim();
    let mut coords = Vec::with_capacity(n * d);
    match (geometry, sampler) {
        (Geometry::Euclidean { .. }, Sampler::UniformCube) => {
            coords.extend((0..n * d).map(|_| rng.random::<f64>()));
        }
        (Geometry::Hyperbolic, Sampler::HyperbolicDisk { radius }) => {
            if !(radius > 0.0 && radius.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "sampling radius must be positive, got {radius}"
                )));
            }
            for _ in 0..n {
                coords.extend(sample_hyperbolic_disk(rng, radius));
            }
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "sampler {sampler:?} does not match {geometry} geometry"
            )))
        }
    }
    Configuration::from_flat(geometry, coords)
}

/// Oracle minimum and witness certificate for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub min_angle: f64,
    pub certified_angle: f64,
    pub branch: Branch,
    pub oracle_ok: bool,
    pub witness_ok: bool,
}

pub fn check_configuration(config: &Configuration) -> Result<TrialOutcome> {
    let n = config.len();
    let oracle = min_angle(config)?.min_angle;
    let cert = constructive_witness(config)?;
    let geometry = config.geometry();
    Ok(TrialOutcome {
        min_angle: oracle,
        certified_angle: cert.certified_angle,
        branch: cert.branch,
        oracle_ok: within_bound(geometry, oracle, n),
        witness_ok: within_bound(geometry, cert.certified_angle, n)
            && cert.certified_angle >= oracle,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub trial: usize,
    pub min_angle: f64,
    pub certified_angle: f64,
    pub points: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub geometry: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub sampler: Sampler,
    pub bound: f64,
    /// Largest oracle minimum seen over all samples.
    pub max_min_angle: f64,
    /// `bound − max_min_angle`.
    pub min_margin: f64,
    /// Samples whose oracle minimum breaks the bound.
    pub violations: usize,
    /// Samples whose certificate breaks the bound or undercuts the oracle.
    pub witness_failures: usize,
    /// Largest `certified_angle − min_angle`.
    pub max_witness_excess: f64,
    pub mean_witness_excess: f64,
    pub gap_branch: usize,
    pub base_angle_branch: usize,
    pub collinear_branch: usize,
    pub first_violation: Option<ViolationRecord>,
}

impl VerificationSummary {
    pub fn is_clean(&self) -> bool {
        self.violations == 0 && self.witness_failures == 0
    }

    /// Turns a dirty summary into [`Error::TheoremViolation`].
    pub fn into_result(self) -> Result<Self> {
        match &self.first_violation {
            Some(v) => Err(Error::TheoremViolation {
                trial: v.trial,
                min_angle: v.min_angle,
                bound: self.bound,
                config: Box::new(
                    Configuration::from_points(
                        if self.geometry == "hyperbolic" {
                            Geometry::Hyperbolic
                        } else {
                            Geometry::PLANE
                        },
                        &v.points,
                    )
                    .expect("recorded configuration was valid"),
                ),
            }),
            None => Ok(self),
        }
    }
}

/// Samples `trials` random planar configurations and checks both the oracle
/// minimum and the constructive certificate against `π/n` on each.
pub fn verify_theorem(
    geometry: Geometry,
    n: usize,
    trials: usize,
    sampler: Sampler,
    seed: u64,
) -> Result<VerificationSummary> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    if !geometry.is_planar() {
        return Err(Error::WrongGeometry {
            expected: "planar (euclidean-2 or hyperbolic)",
        });
    }

    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t as u64);
            let config = sample_configuration(&mut rng, geometry, n, sampler)?;
            let outcome = check_configuration(&config)?;
            Ok((outcome, config))
        })
        .map(|r: Result<(TrialOutcome, Configuration)>| {
            r.map(|(o, c)| {
                let keep = (!o.oracle_ok || !o.witness_ok).then_some(c);
                (o, keep)
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut summary = VerificationSummary {
        geometry: geometry.name().to_string(),
        n,
        trials,
        seed,
        sampler,
        bound: PI / n as f64,
        max_min_angle: f64::NEG_INFINITY,
        min_margin: 0.0,
        violations: 0,
        witness_failures: 0,
        max_witness_excess: 0.0,
        mean_witness_excess: 0.0,
        gap_branch: 0,
        base_angle_branch: 0,
        collinear_branch: 0,
        first_violation: None,
    };
    let mut excess_sum = 0.0;
    for (trial, (o, bad)) in outcomes.into_iter().enumerate() {
        summary.max_min_angle = summary.max_min_angle.max(o.min_angle);
        let excess = o.certified_angle - o.min_angle;
        summary.max_witness_excess = summary.max_witness_excess.max(excess);
        excess_sum += excess;
        match o.branch {
            Branch::Gap => summary.gap_branch += 1,
            Branch::BaseAngle => summary.base_angle_branch += 1,
            Branch::Collinear => summary.collinear_branch += 1,
        }
        summary.violations += usize::from(!o.oracle_ok);
        summary.witness_failures += usize::from(!o.witness_ok);
        if let (Some(c), None) = (bad, &summary.first_violation) {
            summary.first_violation = Some(ViolationRecord {
                trial,
                min_angle: o.min_angle,
                certified_angle: o.certified_angle,
                points: c.to_point_vecs(),
            });
        }
    }
    summary.min_margin = summary.bound - summary.max_min_angle;
    summary.mean_witness_excess = excess_sum / trials as f64;
    Ok(summary)
}
