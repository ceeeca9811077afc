//! Closed-form Stampfli points for structured matrices, the doubleton
//! criterion, and a dispatcher that falls back to the oracle.
//!
//! Structural detectors return [`Reject`] rather than an error when the
//! matrix does not have the required shape.

mod poly;
mod three;

use std::fmt;

use num_complex::Complex64;

pub use poly::{build_PA, positive_roots, resultant_res, st_toe_abs, RealPolynomial};
pub use three::{
    canonical_3x3, multiple_eig_st_criterion, select_root, st_3x3_singleton, st_singleton_xyz0,
    RootSelection, SpectrumKind, TriangularForm3, TAU_Z,
};

use crate::error::{Error, Result};
use crate::matcore::{eigenvalues, operator_norm, CMatrix};
use crate::oracle::{stampfli_oracle, Method, StampfliResult};

/// A structural test that did not match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reject(pub String);

impl fmt::Display for Reject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Reject {}

fn reject<T>(msg: impl Into<String>) -> std::result::Result<T, Reject> {
    Err(Reject(msg.into()))
}

fn require_dim(a: &CMatrix, n: usize) -> Result<()> {
    if a.dim() == n {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "expected a {n}x{n} matrix, got {0}x{0}",
            a.dim()
        )))
    }
}

/// `trace(A)/2` for a 2×2 matrix.
pub fn st_2x2(a: &CMatrix) -> Result<Complex64> {
    require_dim(a, 2)?;
    Ok(a.trace() / 2.0)
}

/// `‖A − λI‖` for a 2×2 matrix from its eigenvalues and the off-diagonal
/// modulus `c` of its Schur form, `c² = ‖A‖_F² − |λ₁|² − |λ₂|²`
/// (evaluated after removing the trace to limit cancellation).
pub fn norm_2x2(a: &CMatrix, lambda: Complex64) -> Result<f64> {
    require_dim(a, 2)?;
    let eigs = eigenvalues(a)?;
    let m = a.trace() / 2.0;
    let c2 = (a.shifted(m).frobenius_norm().powi(2)
        - (eigs[0] - m).norm_sqr()
        - (eigs[1] - m).norm_sqr())
    .max(0.0);
    let d1 = (eigs[0] - lambda).norm_sqr();
    let d2 = (eigs[1] - lambda).norm_sqr();
    let root = ((d1 - d2).powi(2) + c2 * c2 + 2.0 * c2 * (d1 + d2)).sqrt();
    Ok((0.5 * (d1 + d2 + c2 + root)).sqrt())
}

/// `(a₁ + a₂)/2` for `A = [[a₁I, X], [Y*, a₂I]]` with `XY*` and `Y*X` normal.
///
/// Diagonal blocks must be scalar within `tol·‖A‖`; normality is tested as
/// `‖MM* − M*M‖_F ≤ tol·‖A‖⁴` and skipped when `a₁ = a₂` within `tol·‖A‖`.
pub fn st_block_scalar(
    a: &CMatrix,
    n1: usize,
    n2: usize,
    tol: f64,
) -> std::result::Result<Complex64, Reject> {
    let n = a.dim();
    if n1 + n2 != n || n1 == 0 || n2 == 0 {
        return reject(format!(
            "partition {n1}+{n2} does not split a {n}x{n} matrix"
        ));
    }
    let norm = a.frobenius_norm();
    let a1 = CMatrix::from_fn(n1, |i, j| a[(i, j)]).trace() / n1 as f64;
    let a2 = CMatrix::from_fn(n2, |i, j| a[(n1 + i, n1 + j)]).trace() / n2 as f64;
    let tol_entry = tol * norm;
    for i in 0..n {
        for j in 0..n {
            let same_block = (i < n1) == (j < n1);
            if !same_block {
                continue;
            }
            let want = if i != j {
                Complex64::new(0.0, 0.0)
            } else if i < n1 {
                a1
            } else {
                a2
            };
            if (a[(i, j)] - want).norm() > tol_entry {
                return reject(format!("diagonal block entry ({i},{j}) is not scalar"));
            }
        }
    }
    if (a1 - a2).norm() > tol_entry {
        let x = a.block(0..n1, n1..n);
        let y_adj = a.block(n1..n, 0..n1);
        let bound = tol * norm.powi(4);
        if x.mul(&y_adj).normality_defect() > bound || y_adj.mul(&x).normality_defect() > bound {
            return reject("off-diagonal products are not normal");
        }
    }
    Ok((a1 + a2) / 2.0)
}

/// First contiguous split `n1` at which [`st_block_scalar`] accepts.
pub fn detect_block_partition(a: &CMatrix, tol: f64) -> Option<(usize, Complex64)> {
    let n = a.dim();
    let d = a.diag();
    let tol_entry = tol * a.frobenius_norm();
    (1..n)
        // only split where the diagonal run changes, or anywhere if it is constant
        .filter(|&k| {
            let run1 = d[..k].iter().all(|z| (z - d[0]).norm() <= tol_entry);
            let run2 = d[k..].iter().all(|z| (z - d[k]).norm() <= tol_entry);
            run1 && run2
        })
        .find_map(|k| st_block_scalar(a, k, n - k, tol).ok().map(|st| (k, st)))
}

/// Least-squares quadratic fit `A² + pA + qI ≈ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticFit {
    pub p: Complex64,
    pub q: Complex64,
    /// `‖A² + pA + qI‖_F`.
    pub residual: f64,
    /// `‖A − tr(A)/n·I‖_F`; the residual is judged against its square.
    pub spread: f64,
}

/// Fits `p, q` over the span of `{A, I}` after removing the trace, which
/// makes the two basis directions orthogonal.
pub fn fit_quadratic(a: &CMatrix) -> QuadraticFit {
    let n = a.dim() as f64;
    let c = a.trace() / n;
    let a0 = a.shifted(c);
    let spread = a0.frobenius_norm();
    if spread == 0.0 {
        return QuadraticFit {
            p: -2.0 * c,
            q: c * c,
            residual: 0.0,
            spread,
        };
    }
    let sq = &a0 * &a0;
    // ⟨A0, A0²⟩ = tr(A0* A0²)
    let inner: Complex64 = a0
        .entries()
        .iter()
        .zip(sq.entries())
        .map(|(x, y)| x.conj() * y)
        .sum();
    let p0 = -inner / (spread * spread);
    let q0 = -sq.trace() / n;
    let res = &(&sq + &a0.scale(p0)) + &CMatrix::identity(a.dim()).scale(q0);
    let p = p0 - 2.0 * c;
    let q = q0 - c * c - p * c;
    QuadraticFit {
        p,
        q,
        residual: res.frobenius_norm(),
        spread,
    }
}

/// `−p/2` when `A² + pA + qI = 0` within `tol·‖A − tr(A)/n·I‖_F²`.
pub fn st_quadratic(a: &CMatrix, tol: f64) -> std::result::Result<Complex64, Reject> {
    let fit = fit_quadratic(a);
    if fit.spread <= tol * a.frobenius_norm() {
        return Ok(a.trace() / a.dim() as f64);
    }
    if fit.residual <= tol * fit.spread * fit.spread {
        Ok(-fit.p / 2.0)
    } else {
        reject(format!(
            "quadratic residual {:.3e} exceeds tolerance",
            fit.residual
        ))
    }
}

/// The common diagonal `a` when `a_ij = 0` for every even nonzero `i − j`.
pub fn st_tridiagonal_constant(a: &CMatrix, tol: f64) -> std::result::Result<Complex64, Reject> {
    let n = a.dim();
    let mean = a.trace() / n as f64;
    let bound = tol * a.frobenius_norm();
    for i in 0..n {
        for j in 0..n {
            let gap = i.abs_diff(j);
            let dev = if gap == 0 {
                (a[(i, j)] - mean).norm()
            } else if gap % 2 == 0 {
                a[(i, j)].norm()
            } else {
                0.0
            };
            if dev > bound {
                return reject(format!("entry ({i},{j}) breaks the parity pattern"));
            }
        }
    }
    Ok(mean)
}

/// Stampfli point by the first matching closed form, else the oracle.
///
/// Order: 2×2, quadratic, constant-diagonal parity pattern, two-block
/// scalar, 3×3 singleton spectrum, oracle. A closed-form answer whose
/// certificate fails is replaced by the oracle with method `Fallback`.
pub fn st_dispatch(a: &CMatrix, tol: f64) -> Result<StampfliResult> {
    let candidate = st_closed_form(a, tol)?;
    let a_norm = operator_norm(a)?;
    match candidate {
        Some(r) if r.certified(a_norm) => Ok(r),
        Some(r) => {
            log::warn!(
                "{} closed form failed its certificate (margin {:.3e}); using the oracle",
                r.method,
                r.certificate_margin
            );
            let mut o = stampfli_oracle(a, tol)?;
            o.method = Method::Fallback;
            Ok(o)
        }
        None => stampfli_oracle(a, tol),
    }
}

/// The first matching closed form, without the certificate fallback.
/// `None` when no structure is recognized.
pub fn st_closed_form(a: &CMatrix, tol: f64) -> Result<Option<StampfliResult>> {
    let n = a.dim();
    let found = if n == 2 {
        Some((st_2x2(a)?, Method::TwoByTwo))
    } else if let Ok(p) = st_quadratic(a, tol) {
        Some((p, Method::Quadratic))
    } else if let Ok(p) = st_tridiagonal_constant(a, tol) {
        Some((p, Method::Tridiagonal))
    } else if let Some((_, p)) = detect_block_partition(a, tol) {
        Some((p, Method::BlockScalar))
    } else {
        None
    };
    if let Some((p, method)) = found {
        return StampfliResult::certify(a, p, method, 0).map(Some);
    }
    if n == 3 {
        if let Ok(f) = canonical_3x3(a) {
            if f.kind == SpectrumKind::Singleton {
                return st_3x3_singleton(a, tol).map(Some);
            }
        }
    }
    Ok(None)
}

/// Almost-normal layout: `diag(λ₁, …, λ_{n−1}, μ)` plus the last column `b`.
pub fn gen_almost_normal(lams: &[Complex64], bs: &[f64], mu: Complex64) -> Result<CMatrix> {
    if lams.len() != bs.len() {
        return Err(Error::InvalidInput(format!(
            "{} diagonal entries but {} couplings",
            lams.len(),
            bs.len()
        )));
    }
    let m = lams.len();
    Ok(CMatrix::from_fn(m + 1, |i, j| {
        if i == j {
            if i < m {
                lams[i]
            } else {
                mu
            }
        } else if j == m {
            Complex64::new(bs[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
}
