//! Real polynomials, the quintic `P_A`, the 5×5 resultant and the
//! equal-modulus (`u = w`) closed form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{balance, eigenvalues, CMatrix};

/// Leading coefficients below this fraction of the largest are dropped.
pub const TRIM_TOL: f64 = 1e-14;

/// Real polynomial with `coeffs[k]` the coefficient of `s^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    pub coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Builds the polynomial, trimming negligible leading terms.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        let max = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.abs() <= TRIM_TOL * max) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Value and derivative at `s`.
    pub fn eval(&self, s: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut dp = 0.0;
        for &c in self.coeffs.iter().rev() {
            dp = dp * s + p;
            p = p * s + c;
        }
        (p, dp)
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Quotient and remainder of division by `d`.
    pub fn div_rem(&self, d: &RealPolynomial) -> (RealPolynomial, RealPolynomial) {
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if self.degree() < dd {
            return (RealPolynomial { coeffs: vec![0.0] }, self.clone());
        }
        let lead = d.coeffs[dd];
        let mut quot = vec![0.0; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd] / lead;
            quot[k] = q;
            for (j, &c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= q * c;
            }
        }
        rem.truncate(dd.max(1));
        (
            RealPolynomial { coeffs: quot },
            RealPolynomial { coeffs: rem },
        )
    }

    pub fn mul(&self, other: &RealPolynomial) -> RealPolynomial {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial { coeffs: out }
    }
}

/// The quintic whose positive roots are the candidate values of `|ζ|`
/// for a singleton-spectrum 3×3 matrix with `|x| = u`, `|y| = v`, `|z| = w`.
#[allow(non_snake_case)]
pub fn build_PA(u: f64, v: f64, w: f64) -> RealPolynomial {
    let (u2, v2, w2) = (u * u, v * v, w * w);
    let (u4, v4, w4) = (u2 * u2, v2 * v2, w2 * w2);
    let (u6, v6) = (u4 * u2, v4 * v2);
    let c5 = 4.0
        * (u2 + v2)
        * (u6 + 3.0 * u4 * (v2 + w2) + (v2 + w2).powi(3) + 3.0 * u2 * (v4 - 7.0 * v2 * w2 + w4));
    let c4 = 4.0
        * u
        * v
        * w
        * (4.0 * u6
            + 6.0 * u4 * (2.0 * v2 - 3.0 * w2)
            + (v2 + w2).powi(2) * (4.0 * v2 + w2)
            + 6.0 * u2 * (2.0 * v4 - 6.0 * v2 * w2 + w4));
    let c3 = 3.0
        * u2
        * w2
        * (2.0 * u6
            + 7.0 * v6
            + 13.0 * v4 * w2
            + 6.0 * v2 * w4
            + u4 * (11.0 * v2 - 5.0 * w2)
            + 2.0 * u2 * (8.0 * v4 - 14.0 * v2 * w2 + w4));
    let c2 = u2
        * u
        * v
        * w2
        * w
        * (9.0 * u4 + 7.0 * v4 + 18.0 * v2 * w2 + 6.0 * w4 + 4.0 * u2 * (4.0 * v2 - 3.0 * w2));
    let c1 = u4 * v2 * w4 * (-5.0 * v2 + 3.0 * w2);
    let c0 = -3.0 * u4 * u * v2 * v * w4 * w;
    RealPolynomial::new(vec![c0, c1, c2, c3, c4, c5])
}

/// Determinant of the 5×5 resultant matrix of the two reduced equations
/// for a unit-diagonal triangle with entries `x`, `y`, `z`.
pub fn resultant_res(x: f64, y: f64, z: f64) -> f64 {
    let a1 = 2.0 * x;
    let a2 = -3.0 * x * z;
    let a3 = x * z * z;
    let a4 = 2.0 * y - x * z;
    let b1 = 4.0 * x * x + y * y + z * z - x * y * z;
    let b2 = -(z.powi(3) + x * x * z + y * y * z + 6.0 * x * y - x * y * z * z);
    let b3 = x * x + 4.0 * y * y + z * z - x * y * z;
    let m = CMatrix::from_real(&[
        &[a1, 0.0, b1, 0.0, 0.0],
        &[a2, a1, b2, b1, 0.0],
        &[a3, a2, b3, b2, b1],
        &[a4, a3, 0.0, b3, b2],
        &[0.0, a4, 0.0, 0.0, b3],
    ]);
    m.determinant().re
}

/// Positive real roots in ascending order.
///
/// Roots are eigenvalues of the balanced companion matrix, polished by two
/// Newton steps; an eigenvalue counts as real when `|Im| ≤ 1e-8·|root|`.
pub fn positive_roots(p: &RealPolynomial) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::Degenerate(
            "zero polynomial has no isolated roots".into(),
        ));
    }
    let d = p.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = p.coeffs[d];
    let companion = CMatrix::from_fn(d, |i, j| {
        if i == 0 {
            Complex64::new(-p.coeffs[d - 1 - j] / lead, 0.0)
        } else if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let eigs = eigenvalues(&balance(&companion))?;
    let root_scale = eigs.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let mut roots: Vec<f64> = eigs
        .iter()
        .filter(|z| z.im.abs() <= 1e-8 * z.norm() && z.re > 1e-12 * root_scale)
        .map(|z| {
            let mut s = z.re;
            for _ in 0..2 {
                let (v, dv) = p.eval(s);
                if dv != 0.0 {
                    let next = s - v / dv;
                    if next.is_finite() && (next - s).abs() <= 1e-6 * s.abs() {
                        s = next;
                    }
                }
            }
            s
        })
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// `|ζ|` for the equal-modulus case `|x| = |z| = u`, `|y| = v`.
pub fn st_toe_abs(u: f64, v: f64) -> f64 {
    let threshold = 2.0 - 3f64.sqrt();
    if v <= threshold * u {
        u * u * v / (u * u - v * v)
    } else {
        u * u * (2.0 * (6.0 * u * u + v * v).sqrt() - v) / (2.0 * (8.0 * u * u + v * v))
    }
}
