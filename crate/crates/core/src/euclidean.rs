//! Euclidean primitives: angles in any dimension, the planar convex hull, and
//! the regular polygon and simplex generators.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use crate::config::{Configuration, Geometry, SEPARATION_TOLERANCE};
use crate::error::{Error, Result};

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Interior angle at `q` of the triangle `(p, q, r)`, in `[0, π]`.
///
/// Planar angles use `atan2(|cross|, dot)` of the edge vectors `q→p` and
/// `q→r`; higher dimensions use the clamped arccosine of the normalized dot
/// product. Collinear triples of distinct points give `0` or `π`.
pub fn angle_at(p: &[f64], q: &[f64], r: &[f64]) -> Result<f64> {
    let d = q.len();
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    for (index, x) in [p, r].into_iter().enumerate() {
        if x.len() != d {
            return Err(Error::DimensionMismatch {
                index: index * 2,
                expected: d,
                found: x.len(),
            });
        }
    }
    if distance(p, q) < SEPARATION_TOLERANCE || distance(r, q) < SEPARATION_TOLERANCE {
        return Err(Error::DegenerateVertex);
    }
    Ok(vertex_angle(p, q, r))
}

/// The arithmetic behind [`angle_at`], without the degeneracy checks.
pub(crate) fn vertex_angle(p: &[f64], q: &[f64], r: &[f64]) -> f64 {
    if q.len() == 2 {
        let a = [p[0] - q[0], p[1] - q[1]];
        let b = [r[0] - q[0], r[1] - q[1]];
        let dot = a[0] * b[0] + a[1] * b[1];
        return cross2(a, b).abs().atan2(dot);
    }
    let (mut dot, mut na, mut nb) = (0.0, 0.0, 0.0);
    for i in 0..q.len() {
        let a = p[i] - q[i];
        let b = r[i] - q[i];
        dot += a * b;
        na += a * a;
        nb += b * b;
    }
    (dot / (na.sqrt() * nb.sqrt())).clamp(-1.0, 1.0).acos()
}

/// Strict convex hull of a planar configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexHull {
    /// Hull vertices in counterclockwise order, starting from the
    /// lexicographically smallest point.
    pub extremal_indices: Vec<usize>,
    /// Every other point, including points lying on a hull edge.
    pub interior_indices: Vec<usize>,
}

impl ConvexHull {
    /// The two hull neighbours `(previous, next)` of the hull vertex at
    /// position `pos` in `extremal_indices`.
    pub fn neighbours(&self, pos: usize) -> (usize, usize) {
        let m = self.extremal_indices.len();
        (
            self.extremal_indices[(pos + m - 1) % m],
            self.extremal_indices[(pos + 1) % m],
        )
    }

    pub fn is_extremal(&self, index: usize) -> bool {
        self.extremal_indices.contains(&index)
    }
}

/// Monotone chain over raw planar points. Collinear boundary points are not
/// hull vertices. Fails with [`Error::AllCollinear`] when fewer than three
/// vertices survive.
pub fn hull_of_points(points: &[[f64; 2]]) -> Result<ConvexHull> {
    let n = points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (points[a], points[b]);
        pa[0]
            .partial_cmp(&pb[0])
            .unwrap_or(Ordering::Equal)
            .then(pa[1].partial_cmp(&pb[1]).unwrap_or(Ordering::Equal))
            .then(a.cmp(&b))
    });

    let turn = |o: usize, a: usize, b: usize| {
        let (po, pa, pb) = (points[o], points[a], points[b]);
        cross2(
            [pa[0] - po[0], pa[1] - po[1]],
            [pb[0] - po[0], pb[1] - po[1]],
        )
    };

    let mut chain: Vec<usize> = Vec::with_capacity(2 * n);
    for &i in &order {
        while chain.len() >= 2 && turn(chain[chain.len() - 2], chain[chain.len() - 1], i) <= 0.0 {
            chain.pop();
        }
        chain.push(i);
    }
    let lower_len = chain.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while chain.len() >= lower_len
            && turn(chain[chain.len() - 2], chain[chain.len() - 1], i) <= 0.0
        {
            chain.pop();
        }
        chain.push(i);
    }
    chain.pop();

    if chain.len() < 3 {
        return Err(Error::AllCollinear);
    }
    let interior_indices = (0..n).filter(|i| !chain.contains(i)).collect();
    Ok(ConvexHull {
        extremal_indices: chain,
        interior_indices,
    })
}

/// Convex hull of a planar Euclidean configuration.
pub fn convex_hull(config: &Configuration) -> Result<ConvexHull> {
    if config.geometry() != Geometry::PLANE {
        return Err(Error::WrongGeometry {
            expected: "euclidean-2",
        });
    }
    let pts: Vec<[f64; 2]> = (0..config.len()).map(|i| config.point2(i)).collect();
    hull_of_points(&pts)
}

/// `n` points equally spaced on a circle of the given radius about the origin,
/// the first one on the positive x-axis.
pub fn regular_ngon(n: usize, circumradius: f64) -> Result<Configuration> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    if !(circumradius > 0.0 && circumradius.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "circumradius must be positive and finite, got {circumradius}"
        )));
    }
    let coords = (0..n)
        .flat_map(|k| {
            let phi = TAU * k as f64 / n as f64;
            [circumradius * phi.cos(), circumradius * phi.sin()]
        })
        .collect();
    Configuration::from_flat(Geometry::PLANE, coords)
}

/// `d + 1` pairwise equidistant points in `ℝᵈ`, centred at the origin.
///
/// Built from the unit basis vectors plus the point `t·(1,…,1)` with
/// `t = (1 − √(d+1)) / d`, which sits at distance `√2` from each of them.
pub fn regular_simplex(d: usize) -> Result<Configuration> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    let t = (1.0 - ((d + 1) as f64).sqrt()) / d as f64;
    let mut points = vec![vec![0.0; d]; d + 1];
    for (i, p) in points.iter_mut().take(d).enumerate() {
        p[i] = 1.0;
    }
    points[d].iter_mut().for_each(|c| *c = t);

    let centroid: Vec<f64> = (0..d)
        .map(|i| points.iter().map(|p| p[i]).sum::<f64>() / (d + 1) as f64)
        .collect();
    for p in &mut points {
        for (c, m) in p.iter_mut().zip(&centroid) {
            *c -= m;
        }
    }
    Configuration::from_points(Geometry::Euclidean { dim: d }, &points)
}
