use serde::Serialize;

use crate::config::{Configuration, Geometry};
use crate::error::Result;
use crate::euclidean::vertex_angle;
use crate::hyperbolic::{angle_from_excess, cosh_excess};

/// Minimum over every triple-angle of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleReport {
    pub min_angle: f64,
    /// `(i, j, k)` with the angle measured at `j`, `i < k`.
    pub witness: [usize; 3],
    pub total_triples_scanned: usize,
}

/// Number of angles `3·C(n,3)` formed by `n` points.
pub fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 2
    }
}

/// Calls `f(i, j, k, angle)` for every angle of the configuration, the vertex
/// being `j` and `i < k`, in lexicographic order of `(i, j, k)`.
///
/// The values are bit-identical to [`Configuration::angle`].
pub fn for_each_triple_angle<F: FnMut(usize, usize, usize, f64)>(config: &Configuration, mut f: F) {
    let n = config.len();
    match config.geometry() {
        Geometry::Euclidean { .. } => {
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    for k in ((i + 1)..n).filter(|&k| k != j) {
                        f(
                            i,
                            j,
                            k,
                            vertex_angle(config.point(i), config.point(j), config.point(k)),
                        );
                    }
                }
            }
        }
        Geometry::Hyperbolic => {
            let mut excess = vec![0.0; n * n];
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        excess[a * n + b] = cosh_excess(config.point2(a), config.point2(b));
                    }
                }
            }
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    for k in ((i + 1)..n).filter(|&k| k != j) {
                        let theta = angle_from_excess(
                            excess[i * n + k],
                            excess[j * n + i],
                            excess[j * n + k],
                        );
                        f(i, j, k, theta);
                    }
                }
            }
        }
    }
}

pub fn all_triple_angles(config: &Configuration) -> Vec<f64> {
    let mut out = Vec::with_capacity(triple_count(config.len()));
    for_each_triple_angle(config, |_, _, _, theta| out.push(theta));
    out
}

/// Exhaustive scan of all `3·C(n,3)` angles. Ties go to the lexicographically
/// smallest triple.
pub fn min_angle(config: &Configuration) -> Result<AngleReport> {
    let mut best = f64::INFINITY;
    let mut witness = [0, 0, 0];
    let mut scanned = 0;
    for_each_triple_angle(config, |i, j, k, theta| {
        scanned += 1;
        if theta < best {
            best = theta;
            witness = [i, j, k];
        }
    });
    Ok(AngleReport {
        min_angle: best,
        witness,
        total_triples_scanned: scanned,
    })
}
