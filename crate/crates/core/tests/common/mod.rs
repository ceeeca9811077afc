#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stampfli::matcore::reflector_onto;
use stampfli::{CMatrix, Complex64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rand_c(r: &mut impl Rng) -> Complex64 {
    c(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0))
}

pub fn rand_matrix(r: &mut impl Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, |_, _| rand_c(r))
}

/// Product of `n` random Householder reflectors.
pub fn rand_unitary(r: &mut impl Rng, n: usize) -> CMatrix {
    let mut u = CMatrix::identity(n);
    for _ in 0..n {
        let x: Vec<Complex64> = (0..n).map(|_| rand_c(r)).collect();
        u = &u * &reflector_onto(&x);
    }
    u
}

pub fn conj_by(u: &CMatrix, a: &CMatrix) -> CMatrix {
    &(&u.adjoint() * a) * u
}

pub fn triangle3(diag: [Complex64; 3], x: Complex64, y: Complex64, z: Complex64) -> CMatrix {
    let zero = c(0.0, 0.0);
    CMatrix::from_rows(&[
        vec![diag[0], x, y],
        vec![zero, diag[1], z],
        vec![zero, zero, diag[2]],
    ])
    .unwrap()
}
