//! Independent oracles shared by the integration tests. Nothing here calls the
//! angle or distance code under test.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Angle at `q` from the three side lengths (Euclidean law of cosines).
pub fn law_of_cosines_angle(p: &[f64], q: &[f64], r: &[f64]) -> f64 {
    let d = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    };
    let (b, c, a) = (d(q, p), d(q, r), d(p, r));
    ((b * b + c * c - a * a) / (2.0 * b * c))
        .clamp(-1.0, 1.0)
        .acos()
}

/// Brute-force minimum over all `3·C(n,3)` angles via side lengths.
pub fn brute_force_min_angle(points: &[Vec<f64>]) -> (f64, usize) {
    let n = points.len();
    let mut best = f64::INFINITY;
    let mut count = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i < k && j != i && j != k {
                    count += 1;
                    best = best.min(law_of_cosines_angle(&points[i], &points[j], &points[k]));
                }
            }
        }
    }
    (best, count)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(m: usize) -> Vec<(f64, f64)> {
    (0..m)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=m {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `∫_a^b f` by composite Gauss–Legendre on `pieces` equal panels.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, pieces: usize) -> f64 {
    let rule = gauss_legendre(20);
    let h = (b - a) / pieces as f64;
    (0..pieces)
        .map(|k| {
            let lo = a + k as f64 * h;
            rule.iter()
                .map(|(x, w)| w * f(lo + 0.5 * h * (x + 1.0)))
                .sum::<f64>()
                * 0.5
                * h
        })
        .sum()
}

/// Hyperbolic length of the radial segment `[0, t]` by integrating the
/// Poincaré line element `2|dx| / (1 − |x|²)`.
pub fn radial_length(t: f64) -> f64 {
    integrate(|s| 2.0 / (1.0 - s * s), 0.0, t, 64)
}

/// Hyperbolic area of the origin-centred disk of Euclidean radius `rho`,
/// integrating the area element `4 / (1 − |x|²)²` in polar coordinates.
pub fn disk_area(rho: f64) -> f64 {
    integrate(
        |s| 2.0 * PI * s * 4.0 / ((1.0 - s * s) * (1.0 - s * s)),
        0.0,
        rho,
        32,
    )
}

pub fn klein(u: [f64; 2]) -> [f64; 2] {
    let s = 2.0 / (1.0 + u[0] * u[0] + u[1] * u[1]);
    [s * u[0], s * u[1]]
}

/// Area of a geodesic triangle by integrating the Klein-model area element
/// `(1 − |x|²)^(−3/2)` over the straight triangle, split into `4^levels`
/// sub-triangles each with a collapsed-square Gauss rule.
pub fn klein_area(a: [f64; 2], b: [f64; 2], c: [f64; 2], levels: u32) -> f64 {
    let rule = gauss_legendre(24);
    let tri = |p: [f64; 2], q: [f64; 2], r: [f64; 2]| -> f64 {
        let det = ((q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0])).abs();
        let mut sum = 0.0;
        for (xu, wu) in &rule {
            let u = 0.5 * (xu + 1.0);
            for (xv, wv) in &rule {
                let v = 0.5 * (xv + 1.0);
                let x = p[0] + u * (q[0] - p[0]) + u * v * (r[0] - q[0]);
                let y = p[1] + u * (q[1] - p[1]) + u * v * (r[1] - q[1]);
                let dens = (1.0 - x * x - y * y).powf(-1.5);
                sum += 0.25 * wu * wv * u * det * dens;
            }
        }
        sum
    };
    fn split(
        p: [f64; 2],
        q: [f64; 2],
        r: [f64; 2],
        level: u32,
        f: &dyn Fn([f64; 2], [f64; 2], [f64; 2]) -> f64,
    ) -> f64 {
        if level == 0 {
            return f(p, q, r);
        }
        let mid = |a: [f64; 2], b: [f64; 2]| [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
        let (pq, qr, rp) = (mid(p, q), mid(q, r), mid(r, p));
        split(p, pq, rp, level - 1, f)
            + split(pq, q, qr, level - 1, f)
            + split(rp, qr, r, level - 1, f)
            + split(pq, qr, rp, level - 1, f)
    }
    split(klein(a), klein(b), klein(c), levels, &tri)
}

/// Unit tangent at `q` of the Poincaré geodesic from `q` towards `p`: the
/// circle through `q` and `p` orthogonal to the unit circle, or the chord
/// when `q`, `p` and the origin are collinear.
pub fn geodesic_tangent(q: [f64; 2], p: [f64; 2]) -> [f64; 2] {
    let chord = [p[0] - q[0], p[1] - q[1]];
    let det = q[0] * p[1] - q[1] * p[0];
    let t = if det.abs() < 1e-12 {
        chord
    } else {
        // c·q = (|q|² + 1)/2, c·p = (|p|² + 1)/2
        let a = (q[0] * q[0] + q[1] * q[1] + 1.0) / 2.0;
        let b = (p[0] * p[0] + p[1] * p[1] + 1.0) / 2.0;
        let c = [(a * p[1] - b * q[1]) / det, (b * q[0] - a * p[0]) / det];
        let radial = [q[0] - c[0], q[1] - c[1]];
        let t = [-radial[1], radial[0]];
        if t[0] * chord[0] + t[1] * chord[1] < 0.0 {
            [-t[0], -t[1]]
        } else {
            t
        }
    };
    let len = t[0].hypot(t[1]);
    [t[0] / len, t[1] / len]
}

/// Angle at `q` between the geodesic tangents towards `p` and `r`.
pub fn tangent_angle(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> f64 {
    let (a, b) = (geodesic_tangent(q, p), geodesic_tangent(q, r));
    (a[0] * b[1] - a[1] * b[0])
        .abs()
        .atan2(a[0] * b[0] + a[1] * b[1])
}

/// Disk automorphism `z ↦ e^{iφ} (z − a) / (1 − ā z)`.
pub fn mobius(z: [f64; 2], a: [f64; 2], phi: f64) -> [f64; 2] {
    let num = [z[0] - a[0], z[1] - a[1]];
    // 1 − ā z
    let den = [
        1.0 - (a[0] * z[0] + a[1] * z[1]),
        -(a[0] * z[1] - a[1] * z[0]),
    ];
    let dd = den[0] * den[0] + den[1] * den[1];
    let w = [
        (num[0] * den[0] + num[1] * den[1]) / dd,
        (num[1] * den[0] - num[0] * den[1]) / dd,
    ];
    let (s, c) = phi.sin_cos();
    [c * w[0] - s * w[1], s * w[0] + c * w[1]]
}

/// Hyperbolic triangle area from the side lengths (hyperbolic L'Huilier):
/// `tan(Δ/4)² = tanh(s/2) tanh((s−a)/2) tanh((s−b)/2) tanh((s−c)/2)`.
pub fn lhuilier_area(a: f64, b: f64, c: f64) -> f64 {
    let s = 0.5 * (a + b + c);
    let prod =
        (s / 2.0).tanh() * ((s - a) / 2.0).tanh() * ((s - b) / 2.0).tanh() * ((s - c) / 2.0).tanh();
    4.0 * prod.max(0.0).sqrt().atan()
}

/// Is `x` a convex combination of `pts`? In the plane this holds iff some
/// triangle of points (or segment, for degenerate sets) contains `x`.
pub fn in_convex_hull(x: [f64; 2], pts: &[[f64; 2]]) -> bool {
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let m = pts.len();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                let (d1, d2, d3) = (cross(a, b, x), cross(b, c, x), cross(c, a, x));
                let tol = 1e-12;
                let neg = d1 < -tol || d2 < -tol || d3 < -tol;
                let pos = d1 > tol || d2 > tol || d3 > tol;
                if !(neg && pos) && cross(a, b, c).abs() > tol {
                    return true;
                }
            }
        }
    }
    false
}
