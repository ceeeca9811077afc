//! Tables and records. Table numbers carry 17 significant digits; JSON
//! numbers use the shortest representation that parses back exactly.

use std::io::Write;

use serde::{Deserialize, Serialize};
use stampfli::numrange::PolygonRegion;
use stampfli::roberts::RobertsReport;
use stampfli::{Complex64, StampfliResult};

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub input_path: String,
    pub st_point: [f64; 2],
    pub min_norm: f64,
    pub method: String,
    pub certificate_margin: f64,
    pub spectrum: Vec<[f64; 2]>,
    pub iterations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl ResultRecord {
    pub fn new(
        input_path: String,
        r: &StampfliResult,
        spectrum: &[Complex64],
        elapsed_ms: Option<f64>,
    ) -> Self {
        Self {
            input_path,
            st_point: pair(r.point),
            min_norm: r.min_norm,
            method: r.method.to_string(),
            certificate_margin: r.certificate_margin,
            spectrum: spectrum.iter().copied().map(pair).collect(),
            iterations: r.iterations,
            elapsed_ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobertsRecord {
    pub input_path: String,
    pub orthogonal: bool,
    pub max_asymmetry: f64,
    pub worst_nu: [f64; 2],
    pub stampfli_zero: bool,
    pub stampfli_point: [f64; 2],
    pub classification: String,
}

impl RobertsRecord {
    pub fn new(input_path: String, r: &RobertsReport) -> Self {
        Self {
            input_path,
            orthogonal: r.orthogonal,
            max_asymmetry: r.max_asymmetry,
            worst_nu: pair(r.worst_nu),
            stampfli_zero: r.stampfli_zero,
            stampfli_point: pair(r.stampfli_point),
            classification: r.classification.to_string(),
        }
    }
}

/// Boundary rows `theta,re,im`, then `eig`, `hull` and `st` rows.
pub fn write_range_table(
    out: &mut dyn Write,
    region: &PolygonRegion,
    eigs: &[Complex64],
    hull: &[Complex64],
    st: Complex64,
) -> std::io::Result<()> {
    writeln!(out, "theta,re,im")?;
    for (theta, w) in region.angles.iter().zip(&region.witness_points) {
        writeln!(out, "{},{},{}", num(*theta), num(w.re), num(w.im))?;
    }
    for z in eigs {
        writeln!(out, "eig,{},{}", num(z.re), num(z.im))?;
    }
    for z in hull {
        writeln!(out, "hull,{},{}", num(z.re), num(z.im))?;
    }
    writeln!(out, "st,{},{}", num(st.re), num(st.im))
}

/// Support rows `theta,support,re,im` followed by summary rows.
pub fn write_support_table(
    out: &mut dyn Write,
    region: &PolygonRegion,
    subspace_dim: usize,
    margin: f64,
    inside: bool,
) -> std::io::Result<()> {
    writeln!(out, "theta,support,re,im")?;
    for ((theta, h), w) in region
        .angles
        .iter()
        .zip(&region.support)
        .zip(&region.witness_points)
    {
        writeln!(
            out,
            "{},{},{},{}",
            num(*theta),
            num(*h),
            num(w.re),
            num(w.im)
        )?;
    }
    writeln!(out, "subspace_dim,{subspace_dim}")?;
    writeln!(out, "margin,{}", num(margin))?;
    writeln!(out, "contains_zero,{inside}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_numbers_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.0f64.sqrt() * 1e-300, 6.02214076e23] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }
}
