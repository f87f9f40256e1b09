//! Derivative-free local minimizers used for polishing.

use std::cmp::Ordering;

/// Nelder–Mead simplex descent. Infeasible points should evaluate to
/// `f64::INFINITY`. Returns the best vertex and its value.
pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    start: &[f64],
    step: f64,
    max_evals: usize,
) -> (Vec<f64>, f64) {
    let dim = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let f0 = f(start);
    simplex.push((start.to_vec(), f0));
    for i in 0..dim {
        let mut x = start.to_vec();
        x[i] += step;
        let fx = f(&x);
        simplex.push((x, fx));
    }
    let mut evals = dim + 1;
    let cmp =
        |a: &(Vec<f64>, f64), b: &(Vec<f64>, f64)| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal);

    while evals < max_evals {
        simplex.sort_by(cmp);
        let (best, worst) = (simplex[0].1, simplex[dim].1);
        if best.is_finite() && (worst - best).abs() <= 1e-15 * (1.0 + best.abs()) {
            break;
        }
        let mut centroid = vec![0.0; dim];
        for (x, _) in &simplex[..dim] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v / dim as f64;
            }
        }
        let toward = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[dim].0)
                .map(|(c, w)| c + t * (w - c))
                .collect()
        };

        let xr = toward(-1.0);
        let fr = f(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = toward(-2.0);
            let fe = f(&xe);
            evals += 1;
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[dim].1 {
                let xc = toward(-0.5);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = toward(0.5);
                let fc = f(&xc);
                (xc, fc)
            };
            evals += 1;
            if fc < simplex[dim].1.min(fr) {
                simplex[dim] = (xc, fc);
            } else {
                let x0 = simplex[0].0.clone();
                for (x, fx) in simplex.iter_mut().skip(1) {
                    for (xi, bi) in x.iter_mut().zip(&x0) {
                        *xi = bi + 0.5 * (*xi - bi);
                    }
                    *fx = f(x);
                }
                evals += dim;
            }
        }
    }
    simplex.sort_by(cmp);
    simplex.swap_remove(0)
}

/// Compass search: try `±step` along every coordinate, move on improvement,
/// halve the step otherwise, stop below `min_step` or after `max_evals`.
pub fn pattern_search<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    start: &[f64],
    mut step: f64,
    min_step: f64,
    max_evals: usize,
) -> (Vec<f64>, f64) {
    let mut x = start.to_vec();
    let mut fx = f(&x);
    let mut evals = 1;
    'outer: while step >= min_step {
        let mut improved = false;
        for i in 0..x.len() {
            for dir in [1.0, -1.0] {
                if evals >= max_evals {
                    break 'outer;
                }
                let old = x[i];
                x[i] = old + dir * step;
                let ft = f(&x);
                evals += 1;
                if ft < fx {
                    fx = ft;
                    improved = true;
                    break;
                }
                x[i] = old;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    (x, fx)
}
