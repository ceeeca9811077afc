//! Schur triangularization with a caller-chosen eigenvalue order.
//!
//! The order is realized by deflation: for each requested eigenvalue a
//! null vector of the trailing block is found, a Householder reflector maps
//! the first basis vector onto it, and the block shrinks by one.

use num_complex::Complex64;

use super::eigen::eigenvalues;
use super::jacobi::hermitian_eigen;
use super::matrix::CMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Relative tolerance for matching the requested order against the computed spectrum.
/// Looser than the clustering threshold because defective eigenvalues of a
/// rotated triangular matrix are only determined to about `ε^{1/3}`.
pub const ORDER_MATCH_TOL: f64 = 1e-5;

/// Returns `(U, T)` with `U` unitary, `T = U* A U` upper triangular and
/// `diag(T)` following `order`.
pub fn schur_triangularize(a: &CMatrix, order: &[Complex64]) -> Result<(CMatrix, CMatrix)> {
    let n = a.dim();
    if order.len() != n {
        return Err(Error::InvalidInput(format!(
            "order lists {} eigenvalues for a {n}x{n} matrix",
            order.len()
        )));
    }
    check_order(a, order)?;
    schur_deflate(a, order)
}

/// Deflation with a caller-vouched eigenvalue order; no spectrum check.
///
/// Useful when the order is known to be exact but the computed spectrum is
/// not (defective eigenvalues split far beyond rounding level).
pub fn schur_deflate(a: &CMatrix, order: &[Complex64]) -> Result<(CMatrix, CMatrix)> {
    let n = a.dim();
    if order.len() != n {
        return Err(Error::InvalidInput(format!(
            "order lists {} eigenvalues for a {n}x{n} matrix",
            order.len()
        )));
    }
    let mut b = a.clone();
    let mut u = CMatrix::identity(n);
    for (k, &lambda) in order.iter().enumerate().take(n - 1) {
        let m = n - k;
        let block = CMatrix::from_fn(m, |i, j| b[(k + i, k + j)]);
        let x = null_vector(&block.shifted(lambda))?;
        let h = reflector_onto(&x);
        let q = CMatrix::from_fn(n, |i, j| {
            if i < k || j < k {
                if i == j {
                    ONE
                } else {
                    ZERO
                }
            } else {
                h[(i - k, j - k)]
            }
        });
        b = &(&q.adjoint() * &b) * &q;
        u = &u * &q;
    }
    for i in 1..n {
        for j in 0..i {
            b[(i, j)] = ZERO;
        }
    }
    Ok((u, b))
}

fn check_order(a: &CMatrix, order: &[Complex64]) -> Result<()> {
    let eigs = eigenvalues(a)?;
    let tol = ORDER_MATCH_TOL * (1.0 + a.frobenius_norm());
    let mut used = vec![false; eigs.len()];
    for &want in order {
        let best = eigs
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|(_, x), (_, y)| (*x - want).norm().total_cmp(&(*y - want).norm()));
        match best {
            Some((i, z)) if (z - want).norm() <= tol => used[i] = true,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "requested eigenvalue {want} does not match the spectrum"
                )))
            }
        }
    }
    Ok(())
}

/// Unit vector spanning (approximately) the null space of a nearly singular `m`:
/// the eigenvector of `m*m` for its smallest eigenvalue.
///
/// Inverse iteration is avoided on purpose: for a defective eigenvalue the
/// eigenvector lies in the range of `m`, and one step lands on a generalized
/// eigenvector instead.
pub fn null_vector(m: &CMatrix) -> Result<Vec<Complex64>> {
    let gram = &m.adjoint() * m;
    Ok(hermitian_eigen(&gram)?.vector(0))
}

/// Hermitian unitary reflector whose first column is a unimodular multiple of unit `x`.
pub fn reflector_onto(x: &[Complex64]) -> CMatrix {
    let m = x.len();
    let phase = if x[0].norm() == 0.0 {
        ONE
    } else {
        x[0] / x[0].norm()
    };
    let alpha = -phase;
    let mut v = x.to_vec();
    v[0] -= alpha;
    let vn2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    CMatrix::from_fn(m, |i, j| {
        let id = if i == j { ONE } else { ZERO };
        id - 2.0 * v[i] * v[j].conj() / vn2
    })
}
