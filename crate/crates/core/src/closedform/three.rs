//! 3×3 matrices whose spectrum has one or two distinct points.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::poly::{build_PA, positive_roots, st_toe_abs};
use crate::error::{Error, Result};
use crate::matcore::{cluster_spectrum, eigenvalues, operator_norm, schur_deflate, CMatrix};
use crate::oracle::{certificate, stampfli_oracle, Method, StampfliResult, CERTIFICATE_TOL};

/// Relative threshold for the `xyz = 0` and `|x| = |z|` branch decisions.
pub const TAU_Z: f64 = 1e-9;
/// Relative threshold on `‖(A − tr(A)/3)³‖_F` for a one-point spectrum.
const NILPOTENT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    Singleton,
    /// `mu` is double, `lam` simple.
    Doubleton,
}

/// Unitary canonical form
///
/// ```text
///     [ mu  u   y  ]
///     [ 0   mu  w  ]        u, w ≥ 0,  |y| = v
///     [ 0   0   lam]
/// ```
///
/// with `mu = lam` for a one-point spectrum.
#[derive(Debug, Clone)]
#[allow(non_snake_case)]
pub struct TriangularForm3 {
    pub kind: SpectrumKind,
    pub lam: Complex64,
    pub mu: Complex64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    /// Entry (1,3) of the canonical triangle.
    pub y: Complex64,
    pub rho: f64,
    /// `arg(x·ȳ·z)` in `(−π, π]`; zero when `uvw = 0`.
    pub phi: f64,
    /// `U` with `U* A U = triangle`.
    pub U: CMatrix,
    pub triangle: CMatrix,
}

impl TriangularForm3 {
    /// `sqrt(u² + v² + w² + ρ²)`.
    pub fn scale(&self) -> f64 {
        (self.u * self.u + self.v * self.v + self.w * self.w + self.rho * self.rho).sqrt()
    }
}

fn classify(a: &CMatrix) -> Result<(SpectrumKind, Complex64, Complex64)> {
    let c = a.trace() / 3.0;
    let n0 = a.shifted(c);
    let nn = n0.frobenius_norm();
    let cube = &(&n0 * &n0) * &n0;
    if nn <= 1e-14 * a.frobenius_norm() || cube.frobenius_norm() <= NILPOTENT_TOL * nn.powi(3) {
        return Ok((SpectrumKind::Singleton, c, c));
    }
    let eigs = eigenvalues(a)?;
    let clusters = cluster_spectrum(&eigs, a.frobenius_norm());
    match clusters.clusters.as_slice() {
        [_] => Ok((SpectrumKind::Singleton, c, c)),
        [p, q] => {
            let simple = if p.multiplicity == 1 {
                p.center
            } else {
                q.center
            };
            let double = (a.trace() - simple) / 2.0;
            Ok((SpectrumKind::Doubleton, simple, double))
        }
        _ => defective_pair(a, &eigs)
            .map(|(simple, double)| (SpectrumKind::Doubleton, simple, double))
            .ok_or_else(|| Error::InvalidInput("3x3 matrix has three distinct eigenvalues".into())),
    }
}

/// A defective double eigenvalue splits by about `sqrt(ε)·‖A‖`, which can
/// exceed the clustering threshold. Accept the closest pair as one point
/// when `(A − μ)²(A − λ)` vanishes.
fn defective_pair(a: &CMatrix, eigs: &[Complex64]) -> Option<(Complex64, Complex64)> {
    let (i, j) = [(0, 1), (0, 2), (1, 2)].into_iter().min_by(|p, q| {
        (eigs[p.0] - eigs[p.1])
            .norm()
            .total_cmp(&(eigs[q.0] - eigs[q.1]).norm())
    })?;
    let double = (eigs[i] + eigs[j]) / 2.0;
    let simple = a.trace() - 2.0 * double;
    let m = a.shifted(double);
    let l = a.shifted(simple);
    let residual = (&(&m * &m) * &l).frobenius_norm();
    let bound = NILPOTENT_TOL * m.frobenius_norm().powi(2) * l.frobenius_norm();
    (residual <= bound).then_some((simple, double))
}

fn unit_phase(z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        z / z.norm()
    }
}

/// Canonical triangular form of a 3×3 matrix with a one- or two-point spectrum.
pub fn canonical_3x3(a: &CMatrix) -> Result<TriangularForm3> {
    if a.dim() != 3 {
        return Err(Error::InvalidInput(format!(
            "expected a 3x3 matrix, got {0}x{0}",
            a.dim()
        )));
    }
    let (kind, lam, mu) = classify(a)?;
    let (q, t) = schur_deflate(a, &[mu, mu, lam])?;

    // diagonal phases making (1,2) and (2,3) nonnegative
    let d2 = unit_phase(t[(0, 1)]).conj();
    let d3 = d2 * unit_phase(t[(1, 2)]).conj();
    let d = CMatrix::diagonal(&[Complex64::new(1.0, 0.0), d2, d3]);
    let mut triangle = &(&d.adjoint() * &t) * &d;
    // a global phase leaves the triangle unchanged; fix it by the first column
    let pivot = (0..3)
        .map(|i| q[(i, 0)])
        .fold(Complex64::new(0.0, 0.0), |m, z| {
            if z.norm() > m.norm() {
                z
            } else {
                m
            }
        });
    let u_mat = (&q * &d).scale(unit_phase(pivot).conj());
    let u = triangle[(0, 1)].norm();
    let w = triangle[(1, 2)].norm();
    triangle[(0, 1)] = Complex64::new(u, 0.0);
    triangle[(1, 2)] = Complex64::new(w, 0.0);
    let y = triangle[(0, 2)];
    let product = Complex64::new(u * w, 0.0) * y.conj();
    let mut phi = if product.norm() == 0.0 {
        0.0
    } else {
        product.arg()
    };
    if phi <= -PI {
        phi = PI;
    }
    Ok(TriangularForm3 {
        kind,
        lam,
        mu,
        u,
        v: y.norm(),
        w,
        y,
        rho: (lam - mu).norm(),
        phi,
        U: u_mat,
        triangle,
    })
}

/// `Some(λ)` when `uvw ≤ τ_z·scale³` for a one-point spectrum.
pub fn st_singleton_xyz0(f: &TriangularForm3) -> Option<Complex64> {
    if f.kind != SpectrumKind::Singleton {
        return None;
    }
    let scale = f.scale();
    (f.u * f.v * f.w <= TAU_Z * scale.powi(3)).then_some(f.lam)
}

/// Stampfli point of a 3×3 matrix with a one-point spectrum.
///
/// Candidates `λ + s·e^{iφ}` over the positive roots `s` of `P_A` are
/// accepted by the membership certificate, smallest first. If none passes,
/// the oracle answers and the method is reported as `Fallback`.
pub fn st_3x3_singleton(a: &CMatrix, tol: f64) -> Result<StampfliResult> {
    let f = canonical_3x3(a)?;
    if f.kind != SpectrumKind::Singleton {
        return Err(Error::InvalidInput("spectrum is not a single point".into()));
    }
    if let Some(p) = st_singleton_xyz0(&f) {
        return StampfliResult::certify(a, p, Method::Singleton3Xyz0, 0);
    }
    let dir = Complex64::from_polar(1.0, f.phi);
    let scale = f.scale();
    if (f.u - f.w).abs() <= TAU_Z * scale {
        let s = st_toe_abs(0.5 * (f.u + f.w), f.v);
        return StampfliResult::certify(a, f.lam + s * dir, Method::Singleton3Toe, 0);
    }

    let sel = select_root(a, &f)?;
    if let Some(k) = sel.selected {
        if k > 0 {
            log::warn!(
                "root {k} of {} (|zeta| = {}) passed membership; smaller roots did not",
                sel.roots.len(),
                sel.roots[k]
            );
        }
        return StampfliResult::certify(a, sel.candidates[k], Method::Singleton3General, 0);
    }
    log::warn!("no positive root of P_A passed membership; using the oracle");
    let mut r = stampfli_oracle(a, tol)?;
    r.method = Method::Fallback;
    Ok(r)
}

/// Positive roots of `P_A` with their candidate points and certificate margins.
#[derive(Debug, Clone)]
pub struct RootSelection {
    pub roots: Vec<f64>,
    pub candidates: Vec<Complex64>,
    pub margins: Vec<f64>,
    /// Index of the smallest root whose candidate passes membership.
    pub selected: Option<usize>,
}

/// Evaluates every candidate `λ + s·e^{iφ}` of a singleton-spectrum form.
pub fn select_root(a: &CMatrix, f: &TriangularForm3) -> Result<RootSelection> {
    let accept = -CERTIFICATE_TOL * (1.0 + operator_norm(a)?);
    let roots = positive_roots(&build_PA(f.u, f.v, f.w))?;
    let dir = Complex64::from_polar(1.0, f.phi);
    let candidates: Vec<Complex64> = roots.iter().map(|&s| f.lam + s * dir).collect();
    let margins = candidates
        .iter()
        .map(|&p| certificate(a, p).map(|c| c.margin))
        .collect::<Result<Vec<f64>>>()?;
    let selected = margins.iter().position(|&m| m >= accept);
    Ok(RootSelection {
        roots,
        candidates,
        margins,
        selected,
    })
}

/// Whether `St(A)` equals the double eigenvalue `μ` of a 3×3 matrix.
///
/// Sign, inequality and equality conditions are tested with slack
/// `tol·scale⁴` (`tol·scale²` for the inequality), where
/// `scale = sqrt(u² + v² + w² + ρ²)`.
pub fn multiple_eig_st_criterion(a: &CMatrix, tol: f64) -> Result<bool> {
    let f = canonical_3x3(a)?;
    if f.kind == SpectrumKind::Singleton {
        return Ok(st_singleton_xyz0(&f).is_some());
    }
    Ok(doubleton_conditions(&f, tol))
}

fn doubleton_conditions(f: &TriangularForm3, tol: f64) -> bool {
    let (u, v, w, rho) = (f.u, f.v, f.w, f.rho);
    let s2 = f.scale().powi(2);
    let s4 = s2 * s2;

    // x̄ y z̄ (λ − μ) with x = u, z = w real
    let sign_term = f.y * (u * w) * (f.lam - f.mu);
    let arg_ok = sign_term.im.abs() <= tol * s4 && sign_term.re <= tol * s4;

    let g = (u * u - rho * rho) * (w * w + rho * rho);
    let ineq_ok = g >= -tol * s4 && (rho * v - u * w).abs() <= g.max(0.0).sqrt() + tol * s2;

    let lhs = v * w * rho.powi(3) + u * v * v * rho * rho + v * w * (v * v + w * w - u * u) * rho
        - u * v * v * w * w;
    let eq_ok = lhs.abs() <= tol * s4;

    arg_ok && ineq_ok && eq_ok
}
