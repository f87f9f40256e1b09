mod common;

use std::f64::consts::{FRAC_PI_3, PI};

use angle_extremes::euclidean::{angle_at, convex_hull, regular_ngon, regular_simplex};
use angle_extremes::{min_angle, Configuration, Geometry};
use proptest::prelude::*;

use common::{brute_force_min_angle, in_convex_hull, law_of_cosines_angle};

fn point2() -> impl Strategy<Value = [f64; 2]> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(x, y)| [x, y])
}

fn separated(p: &[f64], q: &[f64], r: &[f64]) -> bool {
    let d = |a: &[f64], b: &[f64]| {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).powi(2))
            .sum::<f64>()
            .sqrt()
    };
    d(p, q) > 1e-3 && d(q, r) > 1e-3 && d(p, r) > 1e-3
}

#[test]
fn polar_example_matches_side_length_oracle() {
    let p = [1.0, 0.0];
    let r = [0.3f64.cos(), 0.3f64.sin()];
    let oracle = law_of_cosines_angle(&p, &[0.0, 0.0], &r);
    assert!((oracle - 0.3).abs() < 1e-12);
    assert!((angle_at(&p, &[0.0, 0.0], &r).unwrap() - 0.3).abs() < 1e-12);
}

#[test]
fn dodecagon_against_brute_force() {
    let c = regular_ngon(12, 2.0).unwrap();
    let (oracle, count) = brute_force_min_angle(&c.to_point_vecs());
    assert_eq!(count, 660);
    assert!((oracle - PI / 12.0).abs() < 1e-12);
    assert!((min_angle(&c).unwrap().min_angle - PI / 12.0).abs() < 1e-12);
}

#[test]
fn square_and_triangle() {
    assert!(
        (min_angle(&regular_ngon(4, 1.0).unwrap()).unwrap().min_angle - PI / 4.0).abs() < 1e-12
    );
    let tri = regular_ngon(3, 1.0).unwrap();
    for t in angle_extremes::analysis::all_triple_angles(&tri) {
        assert!((t - FRAC_PI_3).abs() < 1e-12);
    }
}

#[test]
fn simplices_against_brute_force() {
    for (d, count) in [(3, 12), (5, 60)] {
        let s = regular_simplex(d).unwrap();
        let (oracle, scanned) = brute_force_min_angle(&s.to_point_vecs());
        assert_eq!(scanned, count);
        assert!((oracle - FRAC_PI_3).abs() < 1e-12);
        for t in angle_extremes::analysis::all_triple_angles(&s) {
            assert!((t - FRAC_PI_3).abs() < 1e-12, "d={d}: {t}");
        }
    }
}

#[test]
fn interior_point_never_extremal() {
    // the fourth point is a strict convex combination of the first three
    let base = [[0.0, 0.0], [4.0, 0.5], [1.0, 3.0], [0.0, 0.0], [5.0, 4.0]];
    let mut pts = base;
    pts[3] = [
        0.2 * base[0][0] + 0.5 * base[1][0] + 0.3 * base[2][0],
        0.2 * base[0][1] + 0.5 * base[1][1] + 0.3 * base[2][1],
    ];
    let c = Configuration::from_points(Geometry::PLANE, &pts).unwrap();
    let hull = convex_hull(&c).unwrap();
    assert!(!hull.is_extremal(3));
    let others: Vec<[f64; 2]> = [0, 1, 2, 4].iter().map(|&i| pts[i]).collect();
    assert!(in_convex_hull(pts[3], &others));
}

proptest! {
    #[test]
    fn angle_is_symmetric(p in point2(), q in point2(), r in point2()) {
        prop_assume!(separated(&p, &q, &r));
        prop_assert_eq!(angle_at(&p, &q, &r).unwrap(), angle_at(&r, &q, &p).unwrap());
    }

    #[test]
    fn angle_in_range_and_matches_oracle(p in point2(), q in point2(), r in point2()) {
        prop_assume!(separated(&p, &q, &r));
        let a = angle_at(&p, &q, &r).unwrap();
        prop_assert!((0.0..=PI).contains(&a));
        let o = law_of_cosines_angle(&p, &q, &r);
        prop_assert!((a - o).abs() < 1e-6);
    }

    #[test]
    fn rigid_motion_invariance(
        p in point2(), q in point2(), r in point2(),
        phi in 0.0f64..std::f64::consts::TAU, tx in -5.0f64..5.0, ty in -5.0f64..5.0,
    ) {
        prop_assume!(separated(&p, &q, &r));
        let (s, c) = phi.sin_cos();
        let m = |v: [f64; 2]| [c * v[0] - s * v[1] + tx, s * v[0] + c * v[1] + ty];
        let a = angle_at(&p, &q, &r).unwrap();
        let b = angle_at(&m(p), &m(q), &m(r)).unwrap();
        prop_assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn scale_invariance(p in point2(), q in point2(), r in point2(), k in 0.01f64..100.0) {
        prop_assume!(separated(&p, &q, &r));
        let sc = |v: [f64; 2]| [k * v[0], k * v[1]];
        let a = angle_at(&p, &q, &r).unwrap();
        let b = angle_at(&sc(p), &sc(q), &sc(r)).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn planar_angle_sum_is_pi(p in point2(), q in point2(), r in point2()) {
        prop_assume!(separated(&p, &q, &r));
        let sum = angle_at(&q, &p, &r).unwrap() + angle_at(&p, &q, &r).unwrap() + angle_at(&p, &r, &q).unwrap();
        prop_assert!((sum - PI).abs() < 1e-10);
    }

    #[test]
    fn spatial_rotation_invariance(
        p in prop::array::uniform3(-5.0f64..5.0),
        q in prop::array::uniform3(-5.0f64..5.0),
        r in prop::array::uniform3(-5.0f64..5.0),
        phi in 0.0f64..std::f64::consts::TAU,
    ) {
        prop_assume!(separated(&p, &q, &r));
        let a = angle_at(&p, &q, &r).unwrap();
        // arccos is ill-conditioned next to 0 and π
        prop_assume!(a.sin() > 1e-3);
        let (s, c) = phi.sin_cos();
        let m = |v: [f64; 3]| [c * v[0] - s * v[2], v[1] + 1.5, s * v[0] + c * v[2]];
        let b = angle_at(&m(p), &m(q), &m(r)).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn hull_matches_containment_oracle(pts in prop::collection::vec(point2(), 3..9)) {
        let Ok(c) = Configuration::from_points(Geometry::PLANE, &pts) else {
            return Ok(());
        };
        let Ok(hull) = convex_hull(&c) else { return Ok(()); };
        let ext: Vec<[f64; 2]> = hull.extremal_indices.iter().map(|&i| pts[i]).collect();
        for &i in &hull.interior_indices {
            prop_assert!(in_convex_hull(pts[i], &ext), "point {i} outside hull");
        }
        // every hull vertex is outside the hull of the other points
        for &i in &hull.extremal_indices {
            let rest: Vec<[f64; 2]> = (0..pts.len()).filter(|&j| j != i).map(|j| pts[j]).collect();
            prop_assert!(!in_convex_hull(pts[i], &rest));
        }
        // counterclockwise
        let m = ext.len();
        let area2: f64 = (0..m).map(|k| {
            let (a, b) = (ext[k], ext[(k + 1) % m]);
            a[0] * b[1] - a[1] * b[0]
        }).sum();
        prop_assert!(area2 > 0.0);
    }
}
