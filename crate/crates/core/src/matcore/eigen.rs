//! Eigenvalues of general complex matrices.
//!
//! Dimensions up to three use the characteristic polynomial (quadratic or
//! Cardano) with one Newton polish; larger matrices go through Householder
//! Hessenberg reduction and Wilkinson-shifted QR with Givens rotations.

use num_complex::Complex64;

use super::matrix::CMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// All `n` eigenvalues of `a`, with multiplicity.
///
/// Triangular input returns its diagonal unchanged.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Complex64>> {
    if !a.is_finite() {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    if a.is_upper_triangular() || a.transpose().is_upper_triangular() {
        return Ok(a.diag());
    }
    match a.dim() {
        1 => Ok(vec![a[(0, 0)]]),
        2 => Ok(eig2(a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]).to_vec()),
        3 => Ok(eig3(a)),
        _ => {
            let mut h = hessenberg(a);
            hessenberg_qr(&mut h)
        }
    }
}

/// Eigenvalues of `[[a, b], [c, d]]`.
pub fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 2] {
    let mid = 0.5 * (a + d);
    let half = 0.5 * (a - d);
    let disc = (half * half + b * c).sqrt();
    [mid + disc, mid - disc]
}

fn eig3(a: &CMatrix) -> Vec<Complex64> {
    // λ³ − c2 λ² + c1 λ − c0
    let c2 = a.trace();
    let minor = |i: usize, j: usize| a[(i, i)] * a[(j, j)] - a[(i, j)] * a[(j, i)];
    let c1 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let c0 = a.determinant();
    let coeffs = [-c0, c1, -c2, Complex64::new(1.0, 0.0)];
    let roots = cubic_roots(-c2, c1, -c0);
    roots.iter().map(|&r| newton_polish(&coeffs, r)).collect()
}

/// Roots of the monic cubic `t³ + a t² + b t + c`.
pub fn cubic_roots(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 3] {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let u1 = -q / 2.0 + disc;
    let u2 = -q / 2.0 - disc;
    let big = if u1.norm() >= u2.norm() { u1 } else { u2 };
    if big.norm() == 0.0 {
        // p = q = 0: triple root
        return [-shift; 3];
    }
    let cbrt = big.powf(1.0 / 3.0);
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut out = [ZERO; 3];
    let mut w = Complex64::new(1.0, 0.0);
    for slot in out.iter_mut() {
        let t = cbrt * w;
        *slot = t - p / (3.0 * t) - shift;
        w *= omega;
    }
    out
}

/// Evaluates a polynomial (coefficient `k` multiplies `z^k`) and its derivative.
pub fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = ZERO;
    let mut dp = ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn newton_polish(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let (p, dp) = horner(coeffs, z);
    if dp.norm() == 0.0 || p.norm() == 0.0 {
        return z;
    }
    let cand = z - p / dp;
    if horner(coeffs, cand).0.norm() < p.norm() {
        cand
    } else {
        z
    }
}

/// Householder reduction to upper Hessenberg form (similarity, eigenvalues preserved).
pub fn hessenberg(a: &CMatrix) -> CMatrix {
    let n = a.dim();
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let alpha_norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let tail: f64 = x[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let phase = if x[0].norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x[0] / x[0].norm()
        };
        let mut v = x.clone();
        v[0] += phase * alpha_norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        // H ← P H P with P = I − 2 v v*/‖v‖² acting on indices k+1..n
        for j in 0..n {
            let s: Complex64 = (0..v.len()).map(|i| v[i].conj() * h[(k + 1 + i, j)]).sum();
            let f = 2.0 * s / vnorm2;
            for i in 0..v.len() {
                h[(k + 1 + i, j)] -= f * v[i];
            }
        }
        for i in 0..n {
            let s: Complex64 = (0..v.len()).map(|j| h[(i, k + 1 + j)] * v[j]).sum();
            let f = 2.0 * s / vnorm2;
            for j in 0..v.len() {
                h[(i, k + 1 + j)] -= f * v[j].conj();
            }
        }
        for i in k + 2..n {
            h[(i, k)] = ZERO;
        }
    }
    h
}

/// Givens rotation `[[c, s], [−s̄, c]]` mapping `(a, b)` to `(r, 0)`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    if b.norm() == 0.0 {
        return (1.0, ZERO);
    }
    if a.norm() == 0.0 {
        return (0.0, Complex64::new(1.0, 0.0));
    }
    let r = a.norm().hypot(b.norm());
    let c = a.norm() / r;
    let s = (a / a.norm()) * b.conj() / r;
    (c, s)
}

/// Shifted QR iteration on an upper Hessenberg matrix; returns its eigenvalues.
pub fn hessenberg_qr(h: &mut CMatrix) -> Result<Vec<Complex64>> {
    let n = h.dim();
    let cap = 100 * n;
    let mut total = 0usize;
    let mut since_deflation = 0usize;
    let mut hi = n - 1;
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let sub = h[(l, l - 1)].norm();
            let diag = h[(l, l)].norm() + h[(l - 1, l - 1)].norm();
            if sub <= f64::EPSILON * diag || sub < f64::MIN_POSITIVE {
                h[(l, l - 1)] = ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if total >= cap {
            return Err(Error::NoConvergence {
                method: "shifted QR",
                iterations: total,
                best: None,
            });
        }
        total += 1;
        since_deflation += 1;

        let [e1, e2] = eig2(
            h[(hi - 1, hi - 1)],
            h[(hi - 1, hi)],
            h[(hi, hi - 1)],
            h[(hi, hi)],
        );
        let d = h[(hi, hi)];
        let mut mu = if (e1 - d).norm() <= (e2 - d).norm() {
            e1
        } else {
            e2
        };
        if since_deflation % 11 == 10 {
            // exceptional shift to break cycles
            mu = d + Complex64::new(0.75, 0.5) * h[(hi, hi - 1)].norm();
        }

        for i in l..=hi {
            h[(i, i)] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - l);
        for k in l..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..=hi {
                let a = h[(k, j)];
                let b = h[(k + 1, j)];
                h[(k, j)] = a * c + s * b;
                h[(k + 1, j)] = -s.conj() * a + b * c;
            }
            rots.push((c, s));
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = l + idx;
            for i in l..=(k + 1).min(hi) {
                let a = h[(i, k)];
                let b = h[(i, k + 1)];
                h[(i, k)] = a * c + b * s.conj();
                h[(i, k + 1)] = -a * s + b * c;
            }
        }
        for i in l..=hi {
            h[(i, i)] += mu;
        }
    }
    Ok(h.diag())
}

/// Parlett–Reinsch balancing by powers of two (diagonal similarity).
pub fn balance(a: &CMatrix) -> CMatrix {
    let n = a.dim();
    let mut b = a.clone();
    let radix = 2.0f64;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += b[(j, i)].norm();
                    r += b[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut cc = c;
            let g = r / radix;
            while cc < g {
                f *= radix;
                cc *= radix * radix;
            }
            let g = r * radix;
            while cc > g {
                f /= radix;
                cc /= radix * radix;
            }
            if (cc + r / f) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    b[(i, j)] /= f;
                    b[(j, i)] *= f;
                }
            }
        }
        if done {
            return b;
        }
    }
}
