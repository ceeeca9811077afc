//! Nelder–Mead simplex minimization on `ℝᵈ`.

/// Standard coefficients: reflection, expansion, contraction, shrink.
const ALPHA: f64 = 1.0;
const GAMMA: f64 = 2.0;
const RHO: f64 = 0.5;
const SIGMA: f64 = 0.5;

#[derive(Debug, Clone)]
pub struct SimplexOutcome {
    pub best: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    /// Simplex diameter (max distance from the best vertex) fell below the tolerance.
    pub converged: bool,
}

/// Minimizes `f` from `start` with an initial simplex of edge `step`.
///
/// The initial simplex uses the coordinate directions rotated by `twist`
/// in the first coordinate plane, so restarts can use a differently
/// oriented simplex. Stops when the diameter is below `tol` or after
/// `max_iter` iterations.
pub fn nelder_mead(
    mut f: impl FnMut(&[f64]) -> f64,
    start: &[f64],
    step: f64,
    twist: f64,
    tol: f64,
    max_iter: usize,
) -> SimplexOutcome {
    let d = start.len();
    assert!(d >= 1, "empty parameter vector");
    let mut verts: Vec<(Vec<f64>, f64)> = Vec::with_capacity(d + 1);
    verts.push((start.to_vec(), f(start)));
    for k in 0..d {
        let mut x = start.to_vec();
        if d >= 2 && k < 2 {
            let (s, c) = twist.sin_cos();
            let dir = if k == 0 { [c, s] } else { [-s, c] };
            x[0] += step * dir[0];
            x[1] += step * dir[1];
        } else {
            x[k] += step;
        }
        let fx = f(&x);
        verts.push((x, fx));
    }

    let mut iterations = 0;
    loop {
        verts.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| lex(&a.0, &b.0)));
        let diameter = verts[1..]
            .iter()
            .map(|(x, _)| dist(x, &verts[0].0))
            .fold(0.0, f64::max);
        if diameter < tol {
            return SimplexOutcome {
                best: verts[0].0.clone(),
                value: verts[0].1,
                iterations,
                converged: true,
            };
        }
        if iterations >= max_iter {
            return SimplexOutcome {
                best: verts[0].0.clone(),
                value: verts[0].1,
                iterations,
                converged: false,
            };
        }
        iterations += 1;

        let centroid: Vec<f64> = (0..d)
            .map(|i| verts[..d].iter().map(|(x, _)| x[i]).sum::<f64>() / d as f64)
            .collect();
        let worst = verts[d].clone();
        let along = |t: f64, from: &[f64]| -> Vec<f64> {
            centroid
                .iter()
                .zip(from)
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let xr = along(ALPHA, &worst.0);
        let fr = f(&xr);
        if fr < verts[0].1 {
            let xe = along(GAMMA, &worst.0);
            let fe = f(&xe);
            verts[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < verts[d - 1].1 {
            verts[d] = (xr, fr);
            continue;
        }
        if fr < worst.1 {
            let xc = along(RHO, &worst.0);
            let fc = f(&xc);
            if fc <= fr {
                verts[d] = (xc, fc);
                continue;
            }
        } else {
            let xc = along(-RHO, &worst.0);
            let fc = f(&xc);
            if fc < worst.1 {
                verts[d] = (xc, fc);
                continue;
            }
        }
        let best = verts[0].0.clone();
        for v in verts.iter_mut().skip(1) {
            let x: Vec<f64> = best
                .iter()
                .zip(&v.0)
                .map(|(b, x)| b + SIGMA * (x - b))
                .collect();
            let fx = f(&x);
            *v = (x, fx);
        }
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn lex(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_bowl() {
        let out = nelder_mead(
            |x| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2),
            &[0.0, 0.0],
            0.5,
            0.0,
            1e-10,
            5000,
        );
        assert!(out.converged);
        assert!((out.best[0] - 1.0).abs() < 1e-6 && (out.best[1] + 2.0).abs() < 1e-6);
    }

    #[test]
    fn nonsmooth_cone_is_resolved_to_tolerance() {
        let out = nelder_mead(
            |x| ((x[0] - 0.3).powi(2) + (x[1] - 0.7).powi(2)).sqrt(),
            &[2.0, -1.0],
            1.0,
            0.4,
            1e-11,
            5000,
        );
        assert!(out.converged);
        assert!((out.best[0] - 0.3).abs() < 1e-10 && (out.best[1] - 0.7).abs() < 1e-10);
    }

    #[test]
    fn iteration_cap_reports_non_convergence() {
        let out = nelder_mead(
            |x| x[0].abs() + x[1].abs(),
            &[5.0, 5.0],
            1.0,
            0.0,
            1e-30,
            10,
        );
        assert!(!out.converged);
        assert_eq!(out.iterations, 10);
    }

    #[test]
    fn four_dimensional() {
        let out = nelder_mead(
            |x| {
                x.iter()
                    .enumerate()
                    .map(|(i, v)| (v - i as f64).powi(2))
                    .sum()
            },
            &[0.0; 4],
            1.0,
            0.0,
            1e-9,
            20000,
        );
        for (i, v) in out.best.iter().enumerate() {
            assert!((v - i as f64).abs() < 1e-6);
        }
    }
}
