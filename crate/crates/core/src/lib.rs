//! Minimum angles formed by finite point configurations.
//!
//! For `n` points in the Euclidean plane some triple always forms an angle of
//! at most `π/n`, with equality only for the regular `n`-gon. In the
//! hyperbolic plane the same bound holds strictly and is approached by regular
//! `n`-gons inscribed in ever smaller disks. This crate computes minimum
//! angles, extracts the constructive witness triple, validates the hyperbolic
//! near-optimal family and searches for maxi-min configurations numerically.

pub mod analysis;
pub mod cli;
pub mod config;
pub mod error;
pub mod euclidean;
pub mod hyperbolic;
pub mod io;
pub mod optimizer;

pub use analysis::{
    constructive_witness, min_angle, regularity_score, verify_theorem, AngleReport, Branch,
    Sampler, VerificationSummary, WitnessCertificate,
};
pub use config::{Configuration, Geometry, SEPARATION_TOLERANCE};
pub use error::{Error, Result};
pub use hyperbolic::{HyperbolicPoint, BOUNDARY_TOLERANCE};
pub use optimizer::{optimize, scale_sweep, OptimizerOptions, OptimizerResult};

/// The maxi-min bound `π/n` for `n` points.
pub fn angle_bound(n: usize) -> f64 {
    std::f64::consts::PI / n as f64
}
