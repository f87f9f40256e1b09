use std::f64::consts::TAU;

use crate::config::Configuration;
use crate::error::{Error, Result};

fn relative_spread(values: &[f64], mean: f64) -> f64 {
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / values.len() as f64;
    var.sqrt() / mean
}

/// Distance of a planar configuration from being a regular polygon.
///
/// Root-sum-square of the normalized standard deviations of (a) the distances
/// to the centroid and (b) the consecutive central angles around the
/// centroid. Zero exactly for regular polygons, invariant under similarity
/// transforms. Coordinates are taken as-is, so for a hyperbolic configuration
/// this measures the shape in the disk model.
pub fn regularity_score(config: &Configuration) -> Result<f64> {
    if !config.geometry().is_planar() {
        return Err(Error::WrongGeometry { expected: "planar" });
    }
    let n = config.len();
    let (mut cx, mut cy) = (0.0, 0.0);
    for p in config.points() {
        cx += p[0];
        cy += p[1];
    }
    cx /= n as f64;
    cy /= n as f64;

    let radii: Vec<f64> = config
        .points()
        .map(|p| (p[0] - cx).hypot(p[1] - cy))
        .collect();
    let mean_radius = radii.iter().sum::<f64>() / n as f64;
    let radial = relative_spread(&radii, mean_radius);

    let mut phases: Vec<f64> = config
        .points()
        .map(|p| (p[1] - cy).atan2(p[0] - cx))
        .collect();
    phases.sort_by(f64::total_cmp);
    let mut steps: Vec<f64> = phases.windows(2).map(|w| w[1] - w[0]).collect();
    steps.push(phases[0] + TAU - phases[n - 1]);
    let angular = relative_spread(&steps, TAU / n as f64);

    Ok(radial.hypot(angular))
}
