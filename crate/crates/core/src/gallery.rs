//! Named matrices used by the command-line corpus, the figure datasets and
//! the browser demo.

use num_complex::Complex64;

use crate::matcore::CMatrix;

/// Nilpotent, circular numerical range, `y = 0`.
pub fn fig1() -> CMatrix {
    CMatrix::from_pairs(&[
        &[(0.0, 0.0), (2.0, -1.0), (0.0, 0.0)],
        &[(0.0, 0.0), (0.0, 0.0), (0.0, 2.0)],
        &[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
    ])
}

/// Almost normal with spectrum `{2+i, i, −5}`.
pub fn fig2() -> CMatrix {
    CMatrix::from_pairs(&[
        &[(2.0, 1.0), (0.0, 0.0), (2.0, -2.0)],
        &[(0.0, 0.0), (0.0, 1.0), (2.0, 0.0)],
        &[(0.0, 0.0), (0.0, 0.0), (-5.0, 0.0)],
    ])
}

/// Nilpotent with `|x| = |y| = |z| = 5`.
pub fn fig3() -> CMatrix {
    CMatrix::from_pairs(&[
        &[(0.0, 0.0), (3.0, -4.0), (-5.0, 0.0)],
        &[(0.0, 0.0), (0.0, 0.0), (-4.0, 3.0)],
        &[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
    ])
}

/// Nilpotent with an ovular numerical range.
pub fn fig4() -> CMatrix {
    CMatrix::from_pairs(&[
        &[(0.0, 0.0), (1.0, -4.0), (-3.0, -2.0)],
        &[(0.0, 0.0), (0.0, 0.0), (1.0, 5.0)],
        &[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
    ])
}

/// `[[λ, x, y], [0, λ, z], [0, 0, λ]]`.
pub fn singleton_triangle(lam: Complex64, x: f64, y: f64, z: f64) -> CMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let r = |t: f64| Complex64::new(t, 0.0);
    CMatrix::from_rows(&[
        vec![lam, r(x), r(y)],
        vec![zero, lam, r(z)],
        vec![zero, zero, lam],
    ])
    .expect("finite entries")
}

/// Unique positive root of `P_A`.
pub fn example1(lam: Complex64) -> CMatrix {
    singleton_triangle(lam, 8.0, -1.0, 7.0)
}

/// Three positive roots of `P_A`.
pub fn example2(lam: Complex64) -> CMatrix {
    singleton_triangle(lam, 8.0, -1.0, 7.5)
}

/// Equal moduli `|x| = |z|`, second branch.
pub fn example3(lam: Complex64) -> CMatrix {
    singleton_triangle(lam, 4.0, -2.0, 4.0)
}

/// Circular numerical range centred at 0, not Roberts orthogonal to `I`.
pub fn arbera() -> CMatrix {
    CMatrix::from_real(&[&[0.0, 1.0, 1.0], &[0.0, 0.0, 1.0], &[0.0, 0.0, -0.5]])
}

/// `(name, matrix)` pairs in a fixed order.
pub fn all() -> Vec<(&'static str, CMatrix)> {
    let zero = Complex64::new(0.0, 0.0);
    vec![
        ("fig1", fig1()),
        ("fig2", fig2()),
        ("fig3", fig3()),
        ("fig4", fig4()),
        ("example1", example1(zero)),
        ("example2", example2(zero)),
        ("example3", example3(zero)),
        ("arbera", arbera()),
        ("jordan2", CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]])),
        ("upper2", CMatrix::from_real(&[&[0.0, 1.0], &[0.0, 2.0]])),
        (
            "involution",
            CMatrix::from_real(&[&[1.0, 0.0], &[0.0, -1.0]]),
        ),
    ]
}

/// Looks up a matrix from [`all`] by name.
pub fn by_name(name: &str) -> Option<CMatrix> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, m)| m)
}
