//! Dense complex matrix kernel for small `n`.

mod cluster;
mod eigen;
mod jacobi;
mod matrix;
mod schur;

pub use cluster::{
    cluster_spectrum, cluster_spectrum_with, Cluster, SpectrumClusters, CLUSTER_TOL,
};
pub use eigen::{balance, cubic_roots, eig2, eigenvalues, hessenberg, hessenberg_qr, horner};
pub use jacobi::{hermitian_eigen, top_eigenpair, HermEigen, HERMITIAN_TOL};
pub use matrix::{vec_dot, vec_norm, CMatrix, Rect};
pub use schur::{null_vector, reflector_onto, schur_deflate, schur_triangularize, ORDER_MATCH_TOL};

use crate::error::{Error, Result};

/// Spectral norm `‖A‖ = sqrt(λ_max(A*A))`.
pub fn operator_norm(a: &CMatrix) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    let gram = &a.adjoint() * a;
    let top = hermitian_eigen(&gram)?.max_value();
    Ok(top.max(0.0).sqrt())
}

/// Singular values in descending order.
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>> {
    let gram = &a.adjoint() * a;
    let eig = hermitian_eigen(&gram)?;
    Ok(eig.values.iter().rev().map(|v| v.max(0.0).sqrt()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn identity_and_jordan_norms() {
        for n in 1..6 {
            assert!((operator_norm(&CMatrix::identity(n)).unwrap() - 1.0).abs() < 1e-15);
        }
        let j = CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!((operator_norm(&j).unwrap() - 1.0).abs() < 1e-15);
        let sv = singular_values(&j).unwrap();
        assert!((sv[0] - 1.0).abs() < 1e-15 && sv[1].abs() < 1e-15);
    }

    #[test]
    fn shifted_norms_of_circular_example() {
        let a = CMatrix::from_real(&[&[0.0, 1.0, 1.0], &[0.0, 0.0, 1.0], &[0.0, 0.0, -0.5]]);
        let plus = operator_norm(&a.shifted(Complex64::new(-1.0, 0.0))).unwrap();
        let minus = operator_norm(&a.shifted(Complex64::new(1.0, 0.0))).unwrap();
        assert!((plus - 2.1617).abs() < 5e-4, "{plus}");
        assert!((minus - 2.1366).abs() < 5e-4, "{minus}");
    }

    #[test]
    fn rejects_non_finite() {
        let mut a = CMatrix::identity(2);
        a[(0, 1)] = Complex64::new(f64::INFINITY, 0.0);
        assert!(operator_norm(&a).is_err());
    }
}
