//! Roberts orthogonality of a matrix to the identity:
//! `‖A + νI‖ = ‖A − νI‖` for every scalar `ν`.
//!
//! [`roberts_numeric`] samples `ν` on a polar grid, so a pass is a
//! necessary-condition check only. The classifiers decide the question
//! exactly for quadratic matrices and for 3×3 matrices whose numerical
//! range is a disk.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::closedform::{canonical_3x3, fit_quadratic, st_quadratic, Reject, SpectrumKind};
use crate::error::{Error, Result};
use crate::matcore::{operator_norm, CMatrix};
use crate::numrange::{nr_boundary, DEFAULT_SAMPLES};
use crate::oracle::{stampfli_oracle, DEFAULT_TOL};

pub const DEFAULT_ROBERTS_TOL: f64 = 1e-8;
pub const RADII: usize = 25;
pub const ANGLES: usize = 32;
/// `|St(A)| ≤ ST_ZERO_TOL·‖A‖` counts as `St(A) = 0`.
pub const ST_ZERO_TOL: f64 = 1e-6;
/// Allowed spread of the support function for a disk.
pub const DISK_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    NilpotentQuadratic,
    ScaledInvolution,
    ReducibleScalarPlusNilpotent2,
    Nilpotent3Circular,
    NotOrthogonal,
    Unclassified,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NilpotentQuadratic => "nilpotent_quadratic",
            Classification::ScaledInvolution => "scaled_involution",
            Classification::ReducibleScalarPlusNilpotent2 => "reducible_scalar_plus_nilpotent2",
            Classification::Nilpotent3Circular => "nilpotent3_circular",
            Classification::NotOrthogonal => "not_orthogonal",
            Classification::Unclassified => "unclassified",
        }
    }

    /// Whether the class is one of the orthogonal ones.
    pub fn is_orthogonal(self) -> bool {
        matches!(
            self,
            Classification::NilpotentQuadratic
                | Classification::ScaledInvolution
                | Classification::ReducibleScalarPlusNilpotent2
                | Classification::Nilpotent3Circular
        )
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RobertsReport {
    pub orthogonal: bool,
    /// Largest `|‖A + νI‖ − ‖A − νI‖| / (‖A‖ + |ν|)` over the grid.
    pub max_asymmetry: f64,
    pub worst_nu: Complex64,
    pub stampfli_zero: bool,
    pub stampfli_point: Complex64,
    pub classification: Classification,
}

/// Sampled Roberts test on `ν = r·e^{iθ}`, `r` log-spaced over
/// `[1e-3·‖A‖, 1e3·‖A‖]`, plus the `St(A) = 0` check and a classification.
pub fn roberts_numeric(a: &CMatrix, tol: f64) -> Result<RobertsReport> {
    let norm = operator_norm(a)?;
    if norm == 0.0 {
        return Err(Error::InvalidInput(
            "Roberts test needs a nonzero matrix".into(),
        ));
    }
    let mut max_asymmetry = -1.0;
    let mut worst_nu = Complex64::new(0.0, 0.0);
    for i in 0..RADII {
        let r = norm * 10f64.powf(-3.0 + 6.0 * i as f64 / (RADII - 1) as f64);
        for k in 0..ANGLES {
            let nu = Complex64::from_polar(r, 2.0 * PI * k as f64 / ANGLES as f64);
            let plus = operator_norm(&a.shifted(-nu))?;
            let minus = operator_norm(&a.shifted(nu))?;
            let asym = (plus - minus).abs() / (norm + r);
            if asym > max_asymmetry {
                max_asymmetry = asym;
                worst_nu = nu;
            }
        }
    }
    let st = stampfli_oracle(a, DEFAULT_TOL)?;
    let classification = match classify(a, tol) {
        Some(c) => c,
        None if max_asymmetry > tol => Classification::NotOrthogonal,
        None => Classification::Unclassified,
    };
    Ok(RobertsReport {
        orthogonal: max_asymmetry <= tol,
        max_asymmetry,
        worst_nu,
        stampfli_zero: st.point.norm() <= ST_ZERO_TOL * norm,
        stampfli_point: st.point,
        classification,
    })
}

fn classify(a: &CMatrix, tol: f64) -> Option<Classification> {
    classify_quadratic(a, tol).ok().or_else(|| {
        (a.dim() == 3)
            .then(|| classify_circular3(a, tol).ok())
            .flatten()
    })
}

/// Nilpotent, scaled involution, or neither, for `A² + pA + qI = 0`.
pub fn classify_quadratic(a: &CMatrix, tol: f64) -> std::result::Result<Classification, Reject> {
    st_quadratic(a, tol)?;
    let fit = fit_quadratic(a);
    let s = a.frobenius_norm();
    Ok(if fit.p.norm() > tol * s {
        Classification::NotOrthogonal
    } else if fit.q.norm() <= tol * s * s {
        Classification::NilpotentQuadratic
    } else {
        Classification::ScaledInvolution
    })
}

/// Classification of a 3×3 matrix whose numerical range is a disk.
///
/// The matrix must reduce to `[[μ, x, y], [0, μ, z], [0, 0, λ]]` with
/// `x ȳ z = −(λ − μ)(|y|² + |z|²)` and `|x|² + |y|² + |z|² ≥ 4|λ − μ|²`,
/// and the support function of `A − μI` must be constant; otherwise the
/// input is rejected. A disk not centered at 0 is never orthogonal.
pub fn classify_circular3(a: &CMatrix, tol: f64) -> std::result::Result<Classification, Reject> {
    if a.dim() != 3 {
        return Err(Reject(format!(
            "expected a 3x3 matrix, got {0}x{0}",
            a.dim()
        )));
    }
    let f = canonical_3x3(a).map_err(|e| Reject(e.to_string()))?;
    let lam = f.lam - f.mu;
    let scale = f.scale().max(f.mu.norm());
    let c1 = Complex64::new(f.u * f.w, 0.0) * f.y.conj() + lam * (f.v * f.v + f.w * f.w);
    if c1.norm() > tol * scale.powi(3) {
        return Err(Reject(
            "off-diagonal entries violate the disk relation".into(),
        ));
    }
    if f.u * f.u + f.v * f.v + f.w * f.w < 4.0 * lam.norm_sqr() - tol * scale * scale {
        return Err(Reject("off-diagonal entries too small for a disk".into()));
    }
    let norm = operator_norm(a).map_err(|e| Reject(e.to_string()))?;
    let region =
        nr_boundary(&a.shifted(f.mu), DEFAULT_SAMPLES).map_err(|e| Reject(e.to_string()))?;
    if region.support_spread() > DISK_TOL * norm.max(f64::MIN_POSITIVE) {
        return Err(Reject("numerical range is not a disk".into()));
    }

    let small = tol * scale;
    Ok(if f.mu.norm() > small {
        Classification::NotOrthogonal
    } else if f.kind == SpectrumKind::Singleton || f.rho <= small {
        Classification::Nilpotent3Circular
    } else if f.v <= small && f.w <= small && 2.0 * f.rho <= f.u + small {
        Classification::ReducibleScalarPlusNilpotent2
    } else {
        Classification::NotOrthogonal
    })
}
