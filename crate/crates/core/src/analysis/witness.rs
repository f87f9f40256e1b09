//! The extremal-point argument run forwards.
//!
//! Take a hull vertex `p` with hull neighbours `x₁` and `x_{n−1}`, order the
//! other points by their angle from `x₁` as seen from `p`, and look at the
//! `n − 2` consecutive gaps `γᵢ`. Either some gap is at most `π/n`, or the gaps
//! add up to more than `(n−2)π/n` and one base angle of `△(p, x₁, x_{n−1})`
//! must be at most `π/n`. Either way a concrete triple is certified.

use std::cmp::Ordering;
use std::f64::consts::PI;

use serde::Serialize;

use crate::config::{Configuration, Geometry};
use crate::error::{Error, Result};
use crate::euclidean::{self, ConvexHull};
use crate::hyperbolic;

use super::EUCLIDEAN_SLACK;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// A gap angle at `p` is already small enough.
    Gap,
    /// A base angle of `△(p, x₁, x_{n−1})` is small enough.
    BaseAngle,
    /// All points lie on one line (geodesic); a flat angle is certified.
    Collinear,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessCertificate {
    pub n: usize,
    /// The extremal point `p`.
    pub extremal_index: usize,
    /// `x₁ … x_{n−1}`.
    pub ordering: Vec<usize>,
    /// `γ₁ … γ_{n−2}`.
    pub gaps: Vec<f64>,
    /// `∠(x₁, p, x_{n−1})`.
    pub span: f64,
    /// `(i, j, k)` with the certified angle at `j`.
    pub certified_triple: [usize; 3],
    pub certified_angle: f64,
    pub branch: Branch,
    pub bound: f64,
}

/// Whether `angle` satisfies the `π/n` bound in the given geometry: with a
/// small absolute slack in the Euclidean plane, strictly in the hyperbolic one.
pub fn within_bound(geometry: Geometry, angle: f64, n: usize) -> bool {
    let bound = PI / n as f64;
    if geometry.is_hyperbolic() {
        angle < bound
    } else {
        angle <= bound + EUCLIDEAN_SLACK
    }
}

/// `[first, …, last]` with the middle points sorted by `∠(first, p, x)`, ties
/// broken by distance from `p` (nearer first) and then by index.
pub fn angular_ordering(
    config: &Configuration,
    p: usize,
    first: usize,
    last: usize,
) -> Result<Vec<usize>> {
    let mut keyed = Vec::with_capacity(config.len());
    for x in (0..config.len()).filter(|&x| x != p && x != first && x != last) {
        keyed.push((config.angle(first, p, x)?, config.separation(p, x), x));
    }
    keyed.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(Ordering::Equal)
            .then(a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
            .then(a.2.cmp(&b.2))
    });
    let mut ordering = Vec::with_capacity(config.len() - 1);
    ordering.push(first);
    ordering.extend(keyed.into_iter().map(|(_, _, x)| x));
    ordering.push(last);
    Ok(ordering)
}

fn planar_hull(config: &Configuration) -> Result<ConvexHull> {
    match config.geometry() {
        Geometry::Hyperbolic => hyperbolic::convex_hull(config),
        Geometry::Euclidean { dim: 2 } => euclidean::convex_hull(config),
        Geometry::Euclidean { .. } => Err(Error::WrongGeometry {
            expected: "planar (euclidean-2 or hyperbolic)",
        }),
    }
}

/// Runs the extremal-point procedure and returns the certified triple.
///
/// The extremal point is the hull vertex with the lowest index; `x₁` is its
/// counterclockwise hull neighbour.
pub fn constructive_witness(config: &Configuration) -> Result<WitnessCertificate> {
    let n = config.len();
    let bound = PI / n as f64;
    let hull = match planar_hull(config) {
        Ok(h) => h,
        Err(Error::AllCollinear) => return collinear_witness(config),
        Err(e) => return Err(e),
    };

    let pos = hull
        .extremal_indices
        .iter()
        .enumerate()
        .min_by_key(|(_, &idx)| idx)
        .map(|(pos, _)| pos)
        .expect("hull has at least three vertices");
    let p = hull.extremal_indices[pos];
    let (prev, next) = hull.neighbours(pos);
    let ordering = angular_ordering(config, p, next, prev)?;
    let gaps = ordering
        .windows(2)
        .map(|w| config.angle(w[0], p, w[1]))
        .collect::<Result<Vec<_>>>()?;
    let span = config.angle(next, p, prev)?;

    let (gap_pos, &gap) = gaps
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(Ordering::Equal))
        .expect("at least one gap");

    let geometry = config.geometry();
    let (certified_triple, certified_angle, branch) = if within_bound(geometry, gap, n) {
        (
            [ordering[gap_pos], p, ordering[gap_pos + 1]],
            gap,
            Branch::Gap,
        )
    } else {
        let at_first = config.angle(p, next, prev)?;
        let at_last = config.angle(next, prev, p)?;
        if at_first <= at_last {
            ([p, next, prev], at_first, Branch::BaseAngle)
        } else {
            ([next, prev, p], at_last, Branch::BaseAngle)
        }
    };

    Ok(WitnessCertificate {
        n,
        extremal_index: p,
        ordering,
        gaps,
        span,
        certified_triple,
        certified_angle,
        branch,
        bound,
    })
}

/// All points on one line: the end point sees every other point in the same
/// direction, so any angle there is flat.
fn collinear_witness(config: &Configuration) -> Result<WitnessCertificate> {
    let n = config.len();
    let pts: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            let p = config.point2(i);
            if config.geometry().is_hyperbolic() {
                hyperbolic::to_klein(p)
            } else {
                p
            }
        })
        .collect();
    // direction of the line through the two farthest-apart points
    let (mut a, mut b, mut far) = (0, 1, -1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = (pts[i][0] - pts[j][0]).hypot(pts[i][1] - pts[j][1]);
            if d > far {
                (a, b, far) = (i, j, d);
            }
        }
    }
    let dir = [pts[b][0] - pts[a][0], pts[b][1] - pts[a][1]];
    let proj = |i: usize| (pts[i][0] - pts[a][0]) * dir[0] + (pts[i][1] - pts[a][1]) * dir[1];
    let mut along: Vec<usize> = (0..n).collect();
    along.sort_by(|&x, &y| proj(x).partial_cmp(&proj(y)).unwrap_or(Ordering::Equal));

    let p = along[0];
    let ordering: Vec<usize> = along[1..].to_vec();
    let gaps = ordering
        .windows(2)
        .map(|w| config.angle(w[0], p, w[1]))
        .collect::<Result<Vec<_>>>()?;
    let span = config.angle(ordering[0], p, ordering[n - 2])?;
    let certified_angle = config.angle(ordering[0], p, ordering[1])?;
    Ok(WitnessCertificate {
        n,
        extremal_index: p,
        certified_triple: [ordering[0], p, ordering[1]],
        ordering,
        gaps,
        span,
        certified_angle,
        branch: Branch::Collinear,
        bound: PI / n as f64,
    })
}
