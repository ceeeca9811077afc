mod common;

use common::*;
use proptest::prelude::*;
use stampfli::matcore::{eigenvalues, operator_norm, schur_triangularize};
use stampfli::{CMatrix, Complex64};

fn matrix_strategy(n: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n * n).prop_map(move |v| {
        CMatrix::new(
            n,
            v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_unitarily_invariant(a in matrix_strategy(4), seed in any::<u64>()) {
        let mut r = rng(seed);
        let u = rand_unitary(&mut r, 4);
        let v = rand_unitary(&mut r, 4);
        let na = operator_norm(&a).unwrap();
        let nb = operator_norm(&(&(&u * &a) * &v)).unwrap();
        prop_assert!((na - nb).abs() <= 1e-10 * na.max(1.0));
        prop_assert!((operator_norm(&a.adjoint()).unwrap() - na).abs() <= 1e-12 * na.max(1.0));
    }

    #[test]
    fn schur_residuals(a in matrix_strategy(3)) {
        let eigs = eigenvalues(&a).unwrap();
        let (u, t) = schur_triangularize(&a, &eigs).unwrap();
        let na = operator_norm(&a).unwrap();
        prop_assert!((&conj_by(&u, &a) - &t).max_abs() <= 1e-9 * na.max(1.0));
        prop_assert!((&(&u.adjoint() * &u) - &CMatrix::identity(3)).max_abs() <= 1e-10);
        prop_assert!(t.max_abs_below_diagonal() == 0.0);
    }

    #[test]
    fn eigenvalues_match_trace_and_determinant(n in 2usize..6, seed in any::<u64>()) {
        let a = rand_matrix(&mut rng(seed), n);
        let eigs = eigenvalues(&a).unwrap();
        let scale = (1.0 + operator_norm(&a).unwrap()).powi(n as i32);
        let sum: Complex64 = eigs.iter().sum();
        let prod: Complex64 = eigs.iter().product();
        prop_assert!((sum - a.trace()).norm() <= 1e-8 * scale);
        prop_assert!((prod - a.determinant()).norm() <= 1e-8 * scale);
    }
}
