//! The hyperbolic plane in the Poincaré disk model (curvature −1).
//!
//! Distances use the closed form `arccosh(1 + 2‖u−v‖² / ((1−‖u‖²)(1−‖v‖²)))`.
//! Internally the quantity `cosh d − 1` is carried instead of `d` itself so
//! that small triangles keep full relative precision. Angles come from the
//! hyperbolic law of cosines on the three side lengths.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::analysis;
use crate::config::{Configuration, Geometry, SEPARATION_TOLERANCE};
use crate::error::{Error, Result};
use crate::euclidean::{self, ConvexHull};

/// Points must satisfy `‖u‖ ≤ 1 − BOUNDARY_TOLERANCE`.
pub const BOUNDARY_TOLERANCE: f64 = 1e-7;

/// Relative edge-length spread above which a polygon is not considered regular.
pub const REGULARITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HyperbolicPoint {
    pub x: f64,
    pub y: f64,
}

impl HyperbolicPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        let norm = x.hypot(y);
        if !norm.is_finite() || norm > 1.0 - BOUNDARY_TOLERANCE {
            return Err(Error::BoundaryViolation { norm });
        }
        Ok(HyperbolicPoint { x, y })
    }

    pub fn origin() -> Self {
        HyperbolicPoint { x: 0.0, y: 0.0 }
    }

    pub fn from_array(p: [f64; 2]) -> Result<Self> {
        Self::new(p[0], p[1])
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.x, self.y]
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Beltrami–Klein coordinates `2u / (1 + ‖u‖²)`; geodesics are chords there.
    pub fn to_klein(self) -> [f64; 2] {
        to_klein(self.to_array())
    }
}

pub(crate) fn to_klein(u: [f64; 2]) -> [f64; 2] {
    let s = 2.0 / (1.0 + u[0] * u[0] + u[1] * u[1]);
    [s * u[0], s * u[1]]
}

/// `cosh d(u, v) − 1`, exact in `u ↔ v`.
pub(crate) fn cosh_excess(u: [f64; 2], v: [f64; 2]) -> f64 {
    let dx = u[0] - v[0];
    let dy = u[1] - v[1];
    let nu = 1.0 - (u[0] * u[0] + u[1] * u[1]);
    let nv = 1.0 - (v[0] * v[0] + v[1] * v[1]);
    2.0 * (dx * dx + dy * dy) / (nu * nv)
}

/// `arccosh(1 + e)` without forming `1 + e`.
fn acosh1p(e: f64) -> f64 {
    (e + (e * (e + 2.0)).sqrt()).ln_1p()
}

/// Law of cosines with every side given as `cosh(side) − 1`. `opposite` is
/// the side facing the vertex; `b` and `c` are the sides meeting there.
pub(crate) fn angle_from_excess(opposite: f64, b: f64, c: f64) -> f64 {
    // cosh b cosh c − cosh a, expanded around 1
    let num = b + c + b * c - opposite;
    let den = (b * (b + 2.0) * (c * (c + 2.0))).sqrt();
    (num / den).clamp(-1.0, 1.0).acos()
}

pub(crate) fn distance_raw(u: [f64; 2], v: [f64; 2]) -> f64 {
    acosh1p(cosh_excess(u, v))
}

/// Hyperbolic distance between two disk points.
pub fn distance(u: HyperbolicPoint, v: HyperbolicPoint) -> f64 {
    distance_raw(u.to_array(), v.to_array())
}

pub(crate) fn angle_at_raw(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> Result<f64> {
    let b = cosh_excess(q, p);
    let c = cosh_excess(q, r);
    if acosh1p(b) < SEPARATION_TOLERANCE || acosh1p(c) < SEPARATION_TOLERANCE {
        return Err(Error::DegenerateVertex);
    }
    Ok(angle_from_excess(cosh_excess(p, r), b, c))
}

/// Interior angle at `q` of the geodesic triangle `(p, q, r)`.
pub fn angle_at(p: HyperbolicPoint, q: HyperbolicPoint, r: HyperbolicPoint) -> Result<f64> {
    angle_at_raw(p.to_array(), q.to_array(), r.to_array())
}

/// The three interior angles of a geodesic triangle and its area.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleAngles {
    pub theta_a: f64,
    pub theta_b: f64,
    pub theta_c: f64,
    /// `π − (θa + θb + θc)`.
    pub area: f64,
}

impl TriangleAngles {
    pub fn angle_sum(&self) -> f64 {
        self.theta_a + self.theta_b + self.theta_c
    }
}

/// Angles at `a`, `b`, `c` and the area by angle defect.
pub fn triangle_report(
    a: HyperbolicPoint,
    b: HyperbolicPoint,
    c: HyperbolicPoint,
) -> Result<TriangleAngles> {
    let (ka, kb, kc) = (a.to_klein(), b.to_klein(), c.to_klein());
    let e1 = [kb[0] - ka[0], kb[1] - ka[1]];
    let e2 = [kc[0] - ka[0], kc[1] - ka[1]];
    let cross = e1[0] * e2[1] - e1[1] * e2[0];
    if cross.abs() <= 1e-12 * e1[0].hypot(e1[1]) * e2[0].hypot(e2[1]) {
        return Err(Error::DegenerateTriangle);
    }
    let theta_a = angle_at(b, a, c)?;
    let theta_b = angle_at(a, b, c)?;
    let theta_c = angle_at(a, c, b)?;
    Ok(TriangleAngles {
        theta_a,
        theta_b,
        theta_c,
        area: PI - (theta_a + theta_b + theta_c),
    })
}

/// A metric disk of hyperbolic area `epsilon` and its radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskSpec {
    pub epsilon: f64,
    pub radius: f64,
}

impl DiskSpec {
    /// `2π(cosh r − 1)`, evaluated as `4π sinh²(r/2)`.
    pub fn area(&self) -> f64 {
        let s = (self.radius / 2.0).sinh();
        2.0 * TAU * s * s
    }

    /// Euclidean radius of the disk when centred at the origin of the model.
    pub fn poincare_radius(&self) -> f64 {
        (self.radius / 2.0).tanh()
    }
}

/// The disk of area `epsilon`: radius `arccosh((ε + 2π) / 2π)`.
pub fn disk_for_area(epsilon: f64) -> Result<DiskSpec> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "disk area must be positive and finite, got {epsilon}"
        )));
    }
    Ok(DiskSpec {
        epsilon,
        radius: acosh1p(epsilon / TAU),
    })
}

/// Regular `n`-gon inscribed in the origin-centred disk of area `epsilon`:
/// one radius rotated by multiples of `2π/n`.
pub fn inscribed_regular_ngon(n: usize, epsilon: f64) -> Result<Configuration> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    let rho = disk_for_area(epsilon)?.poincare_radius();
    let coords = (0..n)
        .flat_map(|k| {
            let phi = TAU * k as f64 / n as f64;
            [rho * phi.cos(), rho * phi.sin()]
        })
        .collect();
    Configuration::from_flat(Geometry::Hyperbolic, coords)
}

/// Convex hull of a hyperbolic configuration, computed on the Klein chords.
pub fn convex_hull(config: &Configuration) -> Result<ConvexHull> {
    if !config.geometry().is_hyperbolic() {
        return Err(Error::WrongGeometry {
            expected: "hyperbolic",
        });
    }
    let pts: Vec<[f64; 2]> = (0..config.len())
        .map(|i| to_klein(config.point2(i)))
        .collect();
    euclidean::hull_of_points(&pts)
}

/// Angle data of a regular hyperbolic polygon seen from one vertex `p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NGonValidation {
    pub n: usize,
    pub epsilon: f64,
    /// Index of the vertex the gaps are measured from.
    pub vertex: usize,
    /// The remaining vertices `x₁ … x_{n−1}` in angular order.
    pub ordering: Vec<usize>,
    /// Interior angle of the polygon.
    pub theta_n: f64,
    /// Gap angles `γₖ = ∠(xₖ, p, xₖ₊₁)`, `n − 2` of them.
    pub gamma: Vec<f64>,
    /// `αₖ = θₙ − Σ_{l<k} γ_l`, the angle at `xₖ` of `△(xₖ, p, xₖ₊₁)`.
    pub alpha_k: Vec<f64>,
    /// `βₖ = Σ_{l≤k} γ_l`, the angle at `xₖ₊₁` of `△(xₖ, p, xₖ₊₁)`.
    pub beta_k: Vec<f64>,
    /// Largest mismatch between `αₖ`, `βₖ` and the measured triangle angles.
    pub triangle_identity_error: f64,
    /// `|Σγₖ − θₙ|`.
    pub gap_sum_error: f64,
    /// Minimum over all triples of vertices.
    pub min_angle: f64,
    pub bound: f64,
    pub theta_in_window: bool,
    pub gammas_above_bound: bool,
    /// `2γₖ + θₙ > π − ε` for every `k`.
    pub angle_sums_above_bound: bool,
    pub min_angle_in_window: bool,
}

impl NGonValidation {
    pub fn passes(&self) -> bool {
        self.theta_in_window
            && self.gammas_above_bound
            && self.angle_sums_above_bound
            && self.min_angle_in_window
    }
}

/// Measures `θₙ`, the gaps `γₖ` and their partial sums on a regular
/// hyperbolic polygon and checks them against the `ε`-disk bounds.
pub fn validate_ngon(config: &Configuration, epsilon: f64) -> Result<NGonValidation> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive and finite, got {epsilon}"
        )));
    }
    let hull = convex_hull(config)?;
    let n = config.len();
    if hull.extremal_indices.len() != n {
        return Err(Error::NotRegular { deviation: 1.0 });
    }

    let edges: Vec<f64> = (0..n)
        .map(|i| {
            let a = hull.extremal_indices[i];
            let b = hull.extremal_indices[(i + 1) % n];
            config.separation(a, b)
        })
        .collect();
    let mean = edges.iter().sum::<f64>() / n as f64;
    let spread = edges.iter().fold(0.0_f64, |m, e| m.max((e - mean).abs())) / mean;
    if spread > REGULARITY_TOLERANCE {
        return Err(Error::NotRegular { deviation: spread });
    }

    let pos = hull
        .extremal_indices
        .iter()
        .enumerate()
        .min_by_key(|(_, &idx)| idx)
        .map(|(pos, _)| pos)
        .expect("hull is non-empty");
    let p = hull.extremal_indices[pos];
    let (prev, next) = hull.neighbours(pos);
    let ordering = analysis::angular_ordering(config, p, next, prev)?;

    let theta_n = config.angle(ordering[0], p, ordering[n - 2])?;
    let gamma = ordering
        .windows(2)
        .map(|w| config.angle(w[0], p, w[1]))
        .collect::<Result<Vec<_>>>()?;

    let mut alpha_k = Vec::with_capacity(n - 2);
    let mut beta_k = Vec::with_capacity(n - 2);
    let mut partial = 0.0;
    let mut triangle_identity_error = 0.0_f64;
    for (k, g) in gamma.iter().enumerate() {
        alpha_k.push(theta_n - partial);
        partial += g;
        beta_k.push(partial);
        let (xk, xk1) = (ordering[k], ordering[k + 1]);
        let at_xk = config.angle(p, xk, xk1)?;
        let at_xk1 = config.angle(xk, xk1, p)?;
        triangle_identity_error = triangle_identity_error
            .max((at_xk - alpha_k[k]).abs())
            .max((at_xk1 - beta_k[k]).abs());
    }

    let bound = PI / n as f64;
    let interior = (n - 2) as f64 * PI / n as f64;
    let min_angle = analysis::min_angle(config)?.min_angle;
    Ok(NGonValidation {
        n,
        epsilon,
        vertex: p,
        theta_in_window: interior - epsilon < theta_n && theta_n < interior,
        gammas_above_bound: gamma.iter().all(|&g| g > bound - epsilon),
        angle_sums_above_bound: gamma.iter().all(|&g| 2.0 * g + theta_n > PI - epsilon),
        min_angle_in_window: bound - epsilon < min_angle && min_angle < bound,
        gap_sum_error: (partial - theta_n).abs(),
        ordering,
        theta_n,
        gamma,
        alpha_k,
        beta_k,
        triangle_identity_error,
        min_angle,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn hp(x: f64, y: f64) -> HyperbolicPoint {
        HyperbolicPoint::new(x, y).unwrap()
    }

    #[test]
    fn origin_distance_zero() {
        assert_eq!(
            distance(HyperbolicPoint::origin(), HyperbolicPoint::origin()),
            0.0
        );
    }

    #[test]
    fn diameter_additivity() {
        let d = distance(hp(0.3, 0.0), hp(-0.3, 0.0));
        assert!((d - 4.0 * 0.3_f64.atanh()).abs() < 1e-14);
    }

    #[test]
    fn boundary_rejected() {
        assert!(matches!(
            HyperbolicPoint::new(1.0, 0.0),
            Err(Error::BoundaryViolation { .. })
        ));
        assert!(HyperbolicPoint::new(1.0 - 2e-7, 0.0).is_ok());
        assert!(HyperbolicPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn right_angle_at_origin() {
        let a = angle_at(hp(0.5, 0.0), HyperbolicPoint::origin(), hp(0.0, -0.7)).unwrap();
        assert!((a - FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn degenerate_vertex() {
        let q = hp(0.2, 0.1);
        assert!(matches!(
            angle_at(q, q, hp(0.0, 0.5)),
            Err(Error::DegenerateVertex)
        ));
    }

    #[test]
    fn geodesic_triangle_is_degenerate() {
        // three points on a diameter
        let r = triangle_report(hp(-0.5, 0.0), hp(0.1, 0.0), hp(0.6, 0.0));
        assert!(matches!(r, Err(Error::DegenerateTriangle)));
    }

    #[test]
    fn equilateral_with_quarter_pi_angles() {
        // equilateral triangle centred at the origin; circumradius fixed by
        // requiring every vertex angle to be π/4
        let target = PI / 4.0;
        let (mut lo, mut hi) = (1e-6, 0.99);
        let make = |rho: f64| -> TriangleAngles {
            let v: Vec<HyperbolicPoint> = (0..3)
                .map(|k| {
                    let phi = TAU * k as f64 / 3.0;
                    hp(rho * phi.cos(), rho * phi.sin())
                })
                .collect();
            triangle_report(v[0], v[1], v[2]).unwrap()
        };
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if make(mid).theta_a > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = make(0.5 * (lo + hi));
        assert!((t.theta_a - target).abs() < 1e-12);
        assert!((t.area - PI / 4.0).abs() < 1e-11);
    }

    #[test]
    fn tiny_triangle_is_nearly_euclidean() {
        let (a, b, c) = (hp(1e-4, 0.0), hp(0.0, 1e-4), hp(-1e-4, -0.5e-4));
        let t = triangle_report(a, b, c).unwrap();
        assert!(t.area > 0.0 && t.area < 1e-6);
        let e = euclidean::angle_at(&[0.0, 1e-4], &[1e-4, 0.0], &[-1e-4, -0.5e-4]).unwrap();
        assert!((t.theta_a - e).abs() < 1e-6);
    }

    #[test]
    fn disk_radius_examples() {
        let unit = disk_for_area(TAU * (1f64.cosh() - 1.0)).unwrap();
        assert!((unit.radius - 1.0).abs() < 1e-14);
        assert!(disk_for_area(1e-300).unwrap().radius < 1e-140);
        assert!(disk_for_area(0.0).is_err());
        assert!(disk_for_area(-1.0).is_err());
    }

    #[test]
    fn ngon_vertices_on_circle() {
        let eps = 0.1;
        let c = inscribed_regular_ngon(12, eps).unwrap();
        let r = disk_for_area(eps).unwrap().radius;
        let o = HyperbolicPoint::origin();
        for i in 0..12 {
            let d = distance(o, HyperbolicPoint::from_array(c.point2(i)).unwrap());
            assert!((d - r).abs() < 1e-13);
        }
    }

    #[test]
    fn triangle_ngon_single_gap() {
        let c = inscribed_regular_ngon(3, 0.5).unwrap();
        let v = validate_ngon(&c, 0.5).unwrap();
        assert_eq!(v.gamma.len(), 1);
        assert_eq!(v.gamma[0], v.theta_n);
        assert!(v.passes());
    }

    #[test]
    fn irregular_polygon_rejected() {
        let c = Configuration::from_points(
            Geometry::Hyperbolic,
            &[[0.1, 0.0], [0.0, 0.1], [-0.1, 0.0], [0.0, -0.12]],
        )
        .unwrap();
        assert!(matches!(
            validate_ngon(&c, 0.1),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn euclidean_config_rejected() {
        let c = euclidean::regular_ngon(5, 1.0).unwrap();
        assert!(matches!(
            validate_ngon(&c, 0.1),
            Err(Error::WrongGeometry { .. })
        ));
    }
}
