//! Reference minimizer of `f(λ) = ‖A − λI‖` and the zero-membership
//! certificate `0 ∈ W₀(A − λI)`.
//!
//! The minimizer never uses structure: a 21×21 grid over the (slightly
//! inflated) bounding box of `W(A)` seeds a Nelder–Mead search on
//! `(Re λ, Im λ)`, followed by two restarts with fresh simplices. When the
//! top singular value of `A − λI` is simple near the optimum, `f` is smooth
//! and flat there, so function values alone cannot locate the minimizer
//! beyond about `sqrt(ε)`; in that case a final Newton step on the
//! stationarity condition `⟨(A − λI)v, v⟩ = 0` (`v` the top right singular
//! vector) sharpens the point.

mod simplex;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

pub use simplex::{nelder_mead, SimplexOutcome};

use crate::error::{Error, Result};
use crate::matcore::{hermitian_eigen, operator_norm, top_eigenpair, vec_norm, CMatrix};
use crate::numrange::{
    compress_to_top, nr_boundary, support_function, DEFAULT_SAMPLES, DEFAULT_TOP_TOL,
};

/// Default relative tolerance on the simplex diameter.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Grid points per axis for the seeding phase.
pub const GRID_SIZE: usize = 21;
/// Iteration cap for each simplex run.
pub const MAX_ITERATIONS: usize = 5000;
/// Certificate margins at or above `-CERTIFICATE_TOL·(1 + ‖A‖)` are accepted.
pub const CERTIFICATE_TOL: f64 = 1e-6;

/// Which computation produced a Stampfli point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    TwoByTwo,
    BlockScalar,
    Quadratic,
    Tridiagonal,
    Singleton3Xyz0,
    Singleton3Toe,
    Singleton3General,
    /// A closed form was tried but failed its certificate; the oracle answered.
    Fallback,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::TwoByTwo => "two_by_two",
            Method::BlockScalar => "block_scalar",
            Method::Quadratic => "quadratic",
            Method::Tridiagonal => "tridiagonal",
            Method::Singleton3Xyz0 => "singleton3_xyz0",
            Method::Singleton3Toe => "singleton3_toe",
            Method::Singleton3General => "singleton3_general",
            Method::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed Stampfli point with its norm and certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct StampfliResult {
    pub point: Complex64,
    /// `‖A − point·I‖`.
    pub min_norm: f64,
    pub method: Method,
    /// Support margin of `W₀(A − point·I)`; nonnegative iff it contains 0.
    pub certificate_margin: f64,
    pub iterations: usize,
}

impl StampfliResult {
    /// Builds a result for a point computed elsewhere, evaluating its norm and certificate.
    pub fn certify(
        a: &CMatrix,
        point: Complex64,
        method: Method,
        iterations: usize,
    ) -> Result<Self> {
        let min_norm = operator_norm(&a.shifted(point))?;
        let cert = certificate(a, point)?;
        Ok(Self {
            point,
            min_norm,
            method,
            certificate_margin: cert.margin,
            iterations,
        })
    }

    /// Whether the certificate margin clears `-1e-6·(1 + ‖A‖)`.
    pub fn certified(&self, a_norm: f64) -> bool {
        self.certificate_margin >= -CERTIFICATE_TOL * (1.0 + a_norm)
    }
}

/// `‖A − λI‖`, with `+∞` if the eigensolver fails.
fn norm_at(a: &CMatrix, lambda: Complex64) -> f64 {
    operator_norm(&a.shifted(lambda)).unwrap_or(f64::INFINITY)
}

/// Batch evaluation of `‖A − λI‖`.
pub fn f_profile(a: &CMatrix, points: &[Complex64]) -> Result<Vec<f64>> {
    points
        .iter()
        .map(|&p| operator_norm(&a.shifted(p)))
        .collect()
}

/// Global minimizer of `‖A − λI‖` over `λ ∈ ℂ`.
///
/// `tol` bounds the final simplex diameter relative to `1 + ‖A‖`.
pub fn stampfli_oracle(a: &CMatrix, tol: f64) -> Result<StampfliResult> {
    if tol.is_nan() || tol < 1e-12 {
        return Err(Error::InvalidInput(format!(
            "oracle tolerance must be at least 1e-12, got {tol}"
        )));
    }
    let scale = 1.0 + operator_norm(a)?;
    let tol_abs = tol * scale;

    // W(A) bounding box from four support values.
    let h = |theta: f64| support_function(a, theta).map(|(v, _)| v);
    let (re_max, im_max, re_min, im_min) = (h(0.0)?, h(PI / 2.0)?, -h(PI)?, -h(1.5 * PI)?);
    let extent = (re_max - re_min).max(im_max - im_min);
    let pad = 0.05 * extent + 1e-6 * scale;
    let (x0, x1) = (re_min - pad, re_max + pad);
    let (y0, y1) = (im_min - pad, im_max + pad);
    let dx = (x1 - x0) / (GRID_SIZE - 1) as f64;
    let dy = (y1 - y0) / (GRID_SIZE - 1) as f64;

    let mut seed = Complex64::new(x0, y0);
    let mut seed_value = f64::INFINITY;
    for i in 0..GRID_SIZE {
        for j in 0..GRID_SIZE {
            let lam = Complex64::new(x0 + dx * i as f64, y0 + dy * j as f64);
            let v = norm_at(a, lam);
            // strict comparison keeps the lexicographically first minimizer
            if v < seed_value {
                seed = lam;
                seed_value = v;
            }
        }
    }

    let objective = |x: &[f64]| norm_at(a, Complex64::new(x[0], x[1]));
    let mut step = dx.max(dy);
    let mut best = (seed, seed_value);
    let mut iterations = 0;
    for (round, twist) in [0.0, PI / 6.0, PI / 3.0].into_iter().enumerate() {
        let out = nelder_mead(
            objective,
            &[best.0.re, best.0.im],
            step,
            twist,
            tol_abs,
            MAX_ITERATIONS,
        );
        iterations += out.iterations;
        if !out.converged {
            return Err(Error::NoConvergence {
                method: "Nelder-Mead oracle",
                iterations,
                best: Some(Complex64::new(out.best[0], out.best[1])),
            });
        }
        if out.value <= best.1 || round == 0 {
            best = (Complex64::new(out.best[0], out.best[1]), out.value);
        }
        // restart from the optimum with a smaller, rotated simplex
        step = (step * 1e-3).max(100.0 * tol_abs);
    }

    let point = polish(a, best.0, scale).unwrap_or(best.0);
    StampfliResult::certify(a, point, Method::Oracle, iterations)
}

/// `⟨(A − λI)v, v⟩` for the top right singular vector `v`, or `None` when
/// the top singular value is not clearly simple.
fn stationarity(a: &CMatrix, lambda: Complex64) -> Option<Complex64> {
    let m = a.shifted(lambda);
    let eig = hermitian_eigen(&(&m.adjoint() * &m)).ok()?;
    let n = eig.values.len();
    let top = eig.values[n - 1];
    if n > 1 && top - eig.values[n - 2] <= 1e-6 * top {
        return None;
    }
    Some(m.quadratic_form(&eig.vector(n - 1)))
}

/// Newton iteration on the stationarity condition with a finite-difference
/// Jacobian. Accepted only if it stays close and does not raise `f`.
fn polish(a: &CMatrix, start: Complex64, scale: f64) -> Option<Complex64> {
    let f0 = norm_at(a, start);
    let h = 1e-7 * scale;
    let mut lam = start;
    for _ in 0..8 {
        let g = stationarity(a, lam)?;
        let gx = (stationarity(a, lam + h)? - stationarity(a, lam - h)?) / (2.0 * h);
        let i = Complex64::new(0.0, h);
        let gy = (stationarity(a, lam + i)? - stationarity(a, lam - i)?) / (2.0 * h);
        // [gx.re gy.re; gx.im gy.im] d = −[g.re; g.im]
        let det = gx.re * gy.im - gy.re * gx.im;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dre = (-g.re * gy.im + gy.re * g.im) / det;
        let dim = (-gx.re * g.im + gx.im * g.re) / det;
        lam += Complex64::new(dre, dim);
        if dre.hypot(dim) <= 1e-15 * scale {
            break;
        }
    }
    let moved = (lam - start).norm();
    let f1 = norm_at(a, lam);
    (moved <= 1e-5 * scale && f1 <= f0 * (1.0 + 8.0 * f64::EPSILON)).then_some(lam)
}

/// Zero-membership certificate for `W₀(A − λI)`.
#[derive(Debug, Clone)]
pub struct Certificate {
    /// Minimum support value of `W₀(A − λI)`.
    pub margin: f64,
    pub subspace_dim: usize,
    /// Unit vector of the top eigenspace minimizing `|⟨(A − λI)x, x⟩|`,
    /// computed when the eigenspace has dimension at most three.
    pub witness: Option<Vec<Complex64>>,
    /// `⟨(A − λI)x, x⟩` at the witness.
    pub witness_value: Option<Complex64>,
}

/// Certificate with the default angle count.
pub fn certificate(a: &CMatrix, lambda: Complex64) -> Result<Certificate> {
    certificate_with(a, lambda, DEFAULT_SAMPLES)
}

pub fn certificate_with(a: &CMatrix, lambda: Complex64, samples: usize) -> Result<Certificate> {
    let m = a.shifted(lambda);
    if m.max_abs() == 0.0 {
        // W₀(0) = {0}
        let mut e1 = vec![Complex64::new(0.0, 0.0); a.dim()];
        e1[0] = Complex64::new(1.0, 0.0);
        return Ok(Certificate {
            margin: 0.0,
            subspace_dim: a.dim(),
            witness: Some(e1),
            witness_value: Some(Complex64::new(0.0, 0.0)),
        });
    }
    let comp = compress_to_top(&m, DEFAULT_TOP_TOL)?;
    let region = nr_boundary(&comp.b, samples)?;
    let margin = region.min_support();
    let (witness, witness_value) = if comp.subspace_dim <= 3 {
        let y = zero_witness(&comp.b)?;
        let value = comp.b.quadratic_form(&y);
        (Some(comp.lift(&y)), Some(value))
    } else {
        (None, None)
    };
    Ok(Certificate {
        margin,
        subspace_dim: comp.subspace_dim,
        witness,
        witness_value,
    })
}

/// Unit `y ∈ ℂᵈ` (`d ≤ 3`) minimizing `|y* B y|`, by simplex search over
/// polar coordinates started from support eigenvectors.
fn zero_witness(b: &CMatrix) -> Result<Vec<Complex64>> {
    let d = b.dim();
    if d == 1 {
        return Ok(vec![Complex64::new(1.0, 0.0)]);
    }
    let to_vec = |p: &[f64]| -> Vec<Complex64> {
        match d {
            2 => vec![
                Complex64::new(p[0].cos(), 0.0),
                Complex64::from_polar(p[0].sin(), p[1]),
            ],
            _ => vec![
                Complex64::new(p[0].cos(), 0.0),
                Complex64::from_polar(p[0].sin() * p[1].cos(), p[2]),
                Complex64::from_polar(p[0].sin() * p[1].sin(), p[3]),
            ],
        }
    };
    let to_params = |y: &[Complex64]| -> Vec<f64> {
        let nrm = vec_norm(y);
        let y: Vec<Complex64> = y.iter().map(|z| z / nrm).collect();
        let a0 = y[0].norm().clamp(0.0, 1.0).acos();
        let ph = y[0].arg();
        match d {
            2 => vec![a0, y[1].arg() - ph],
            _ => vec![
                a0,
                y[2].norm().atan2(y[1].norm()),
                y[1].arg() - ph,
                y[2].arg() - ph,
            ],
        }
    };
    let objective = |p: &[f64]| b.quadratic_form(&to_vec(p)).norm();
    let scale = b.max_abs().max(f64::MIN_POSITIVE);

    let mut best: Option<(Vec<f64>, f64)> = None;
    for k in 0..8 {
        let theta = 2.0 * PI * k as f64 / 8.0;
        let rot = Complex64::from_polar(1.0, -theta);
        let h = CMatrix::from_fn(d, |i, j| 0.5 * (rot * b[(i, j)] + (rot * b[(j, i)]).conj()));
        let (_, y) = top_eigenpair(&h)?;
        let out = nelder_mead(objective, &to_params(&y), 0.3, 0.0, 1e-13, 4000);
        if best.as_ref().is_none_or(|(_, v)| out.value < *v) {
            best = Some((out.best, out.value));
        }
        if out.value <= 1e-14 * scale {
            break;
        }
    }
    let (p, _) = best.expect("at least one start");
    Ok(to_vec(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn scalar_matrix() {
        let a = CMatrix::identity(3).scale(c(1.5, -0.5));
        let r = stampfli_oracle(&a, DEFAULT_TOL).unwrap();
        assert!((r.point - c(1.5, -0.5)).norm() < 1e-8);
        assert!(r.min_norm < 1e-8);
    }

    #[test]
    fn two_by_two_midpoint() {
        let a = CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 2.0]]);
        let r = stampfli_oracle(&a, DEFAULT_TOL).unwrap();
        assert!((r.point - c(1.0, 0.0)).norm() < 1e-9, "{}", r.point);
        assert!(r.certificate_margin >= -1e-6);
        assert_eq!(r.method, Method::Oracle);
    }

    #[test]
    fn rejects_tiny_tolerance() {
        assert!(stampfli_oracle(&CMatrix::identity(2), 1e-14).is_err());
    }

    #[test]
    fn certificate_examples() {
        let j = CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let cert = certificate(&j, c(0.0, 0.0)).unwrap();
        assert!(cert.margin.abs() < 1e-15);
        let w = cert.witness.unwrap();
        assert!(w[0].norm() < 1e-15 && (w[1].norm() - 1.0).abs() < 1e-15);

        let d = CMatrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(certificate(&d, c(0.0, 0.0)).unwrap().margin < 0.0);
        assert!(certificate(&d, c(0.5, 0.0)).unwrap().margin > -1e-12);
    }

    #[test]
    fn witness_in_two_dimensional_top_space() {
        // A − λI = diag(2, −2): W₀ = [−2, 2], witness (1, 1)/√2 up to phases
        let a = CMatrix::diagonal(&[c(2.0, 0.0), c(-2.0, 0.0)]);
        let cert = certificate(&a, c(0.0, 0.0)).unwrap();
        assert_eq!(cert.subspace_dim, 2);
        assert!(cert.witness_value.unwrap().norm() < 1e-10);
        assert!((vec_norm(&cert.witness.unwrap()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn profile_symmetry_for_jordan_block() {
        let j = CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let v = f_profile(&j, &[c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert!((v[0] - 1.0).abs() < 1e-15);
        assert!((v[1] - v[2]).abs() < 1e-14);
        // 2‖J − λ‖² = 2|λ|² + 1 + sqrt(1 + 4|λ|²) at |λ| = 1
        let want = ((3.0 + 5f64.sqrt()) / 2.0).sqrt();
        assert!((v[1] - want).abs() < 1e-14);
    }
}
