//! Numerical range `W(A)` and maximal numerical range `W₀(A)` as
//! support-function polygons.
//!
//! For an angle `θ` the support value of `W(A)` is the top eigenvalue of
//! `Re(e^{−iθ}A) = ½(e^{−iθ}A + e^{iθ}A*)`, and the top eigenvector `x`
//! gives the boundary point `⟨Ax, x⟩`. `W₀(A)` is `W(B)` for the
//! compression `B` of `A` onto the top eigenspace of `A*A`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{hermitian_eigen, top_eigenpair, CMatrix};

/// Default number of sampled angles.
pub const DEFAULT_SAMPLES: usize = 720;
/// Smallest accepted number of sampled angles.
pub const MIN_SAMPLES: usize = 16;
/// Relative width of the top eigenspace of `A*A`.
pub const DEFAULT_TOP_TOL: f64 = 1e-8;
/// Relative slack for deciding `0 ∈ R` from the support margin.
pub const MEMBERSHIP_TOL: f64 = 1e-7;

/// Convex region sampled by its support function on a uniform angle grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonRegion {
    /// `2πk/K`, `k = 0..K`.
    pub angles: Vec<f64>,
    /// `support[k] = max Re(e^{−i·angles[k]}·z)` over the region.
    pub support: Vec<f64>,
    /// Points of the region attaining each support value.
    pub witness_points: Vec<Complex64>,
}

impl PolygonRegion {
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Smallest support value; nonnegative exactly when the region contains 0.
    pub fn min_support(&self) -> f64 {
        self.support.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Spread `max − min` of the support values; zero for a disk centered at 0.
    pub fn support_spread(&self) -> f64 {
        let max = self
            .support
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        max - self.min_support()
    }

    /// Axis-aligned bounding box `(re_min, re_max, im_min, im_max)`, read off
    /// the witness points.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let mut b = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for w in &self.witness_points {
            b.0 = b.0.min(w.re);
            b.1 = b.1.max(w.re);
            b.2 = b.2.min(w.im);
            b.3 = b.3.max(w.im);
        }
        b
    }
}

/// Result of compressing `A` onto the top eigenspace of `A*A`.
#[derive(Debug, Clone)]
pub struct CompressionResult {
    /// `P* A P` for the isometry `P` onto the top eigenspace.
    pub b: CMatrix,
    /// Columns of `P` (length-`n` vectors).
    pub basis: Vec<Vec<Complex64>>,
    pub subspace_dim: usize,
    /// Largest eigenvalue of `A*A`, i.e. `‖A‖²`.
    pub top_value: f64,
}

impl CompressionResult {
    /// Embeds a vector of the compressed space back into `ℂⁿ` (`P y`).
    pub fn lift(&self, y: &[Complex64]) -> Vec<Complex64> {
        let n = self.basis[0].len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (col, &c) in self.basis.iter().zip(y) {
            for (o, &v) in out.iter_mut().zip(col) {
                *o += c * v;
            }
        }
        out
    }
}

/// `λ_max(Re(e^{−iθ}A))` and the boundary point `⟨Ax, x⟩` of the top eigenvector.
pub fn support_function(a: &CMatrix, theta: f64) -> Result<(f64, Complex64)> {
    let (value, x) = support_vector(a, theta)?;
    Ok((value, a.quadratic_form(&x)))
}

fn support_vector(a: &CMatrix, theta: f64) -> Result<(f64, Vec<Complex64>)> {
    let rot = Complex64::from_polar(1.0, -theta);
    let h = CMatrix::from_fn(a.dim(), |i, j| {
        0.5 * (rot * a[(i, j)] + (rot * a[(j, i)]).conj())
    });
    top_eigenpair(&h)
}

fn uniform_angles(k: usize) -> Vec<f64> {
    (0..k).map(|j| 2.0 * PI * j as f64 / k as f64).collect()
}

/// Outer polygonal approximation of `cl W(A)` from `k` support samples.
pub fn nr_boundary(a: &CMatrix, k: usize) -> Result<PolygonRegion> {
    if k < MIN_SAMPLES {
        return Err(Error::InvalidInput(format!(
            "at least {MIN_SAMPLES} angles are required, got {k}"
        )));
    }
    let angles = uniform_angles(k);
    let mut support = Vec::with_capacity(k);
    let mut witness_points = Vec::with_capacity(k);
    for &theta in &angles {
        let (value, w) = support_function(a, theta)?;
        support.push(value);
        witness_points.push(w);
    }
    Ok(PolygonRegion {
        angles,
        support,
        witness_points,
    })
}

/// Compression of `A` onto the eigenspace of `A*A` for eigenvalues within
/// `tau_top·‖A‖²` of the largest.
pub fn compress_to_top(a: &CMatrix, tau_top: f64) -> Result<CompressionResult> {
    let gram = &a.adjoint() * a;
    let eig = hermitian_eigen(&gram)?;
    let top_value = eig.max_value();
    if top_value <= 0.0 {
        return Err(Error::Degenerate(
            "zero matrix: the top eigenspace of A*A is not a proper direction".into(),
        ));
    }
    let cutoff = top_value - tau_top * top_value;
    let basis: Vec<Vec<Complex64>> = (0..a.dim())
        .rev()
        .filter(|&k| eig.values[k] >= cutoff)
        .map(|k| eig.vector(k))
        .collect();
    let d = basis.len();
    let cols: Vec<Vec<Complex64>> = basis.iter().map(|p| a.apply(p)).collect();
    let b = CMatrix::from_fn(d, |i, j| {
        basis[i]
            .iter()
            .zip(&cols[j])
            .map(|(p, ap)| p.conj() * ap)
            .sum()
    });
    Ok(CompressionResult {
        b,
        basis,
        subspace_dim: d,
        top_value,
    })
}

/// `W₀(A)` with the default top-eigenspace tolerance.
pub fn max_numerical_range(a: &CMatrix, k: usize) -> Result<PolygonRegion> {
    max_numerical_range_with(a, k, DEFAULT_TOP_TOL)
}

pub fn max_numerical_range_with(a: &CMatrix, k: usize, tau_top: f64) -> Result<PolygonRegion> {
    let c = compress_to_top(a, tau_top)?;
    nr_boundary(&c.b, k)
}

/// Decides `0 ∈ R` from the support function: a convex set contains the
/// origin iff its support function is nonnegative everywhere.
///
/// Returns the verdict at slack `1e-7·scale` and the raw margin `min support`.
pub fn contains_zero(region: &PolygonRegion, scale: f64) -> (bool, f64) {
    let margin = region.min_support();
    (margin >= -MEMBERSHIP_TOL * scale, margin)
}
