//! Browser bindings. Each export takes a matrix as JSON
//! (`{"n": 2, "data": [[[re, im], ...], ...]}`) and returns JSON.
//! The plain `*_json` functions hold the logic and are tested natively.

use serde::{Deserialize, Serialize};
use stampfli::closedform::st_dispatch;
use stampfli::matcore::eigenvalues;
use stampfli::numrange::{max_numerical_range, nr_boundary, MIN_SAMPLES};
use stampfli::oracle::{f_profile, DEFAULT_TOL};
use stampfli::{CMatrix, Complex64};
use wasm_bindgen::prelude::*;

/// Largest heatmap the demo will evaluate.
pub const MAX_PROFILE_CELLS: usize = 160 * 160;
pub const MAX_SAMPLES: usize = 4096;

#[derive(Deserialize)]
struct MatrixInput {
    n: usize,
    data: Vec<Vec<[f64; 2]>>,
}

fn parse(json: &str) -> Result<CMatrix, String> {
    let m: MatrixInput =
        serde_json::from_str(json).map_err(|e| format!("malformed matrix: {e}"))?;
    if m.n == 0 || m.data.len() != m.n || m.data.iter().any(|r| r.len() != m.n) {
        return Err(format!("expected {0}×{0} entries", m.n));
    }
    let entries = m
        .data
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    CMatrix::new(m.n, entries).map_err(|e| e.to_string())
}

fn pairs(zs: &[Complex64]) -> Vec<[f64; 2]> {
    zs.iter().map(|z| [z.re, z.im]).collect()
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct PointOut {
    point: [f64; 2],
    min_norm: f64,
    method: String,
    certificate_margin: f64,
    spectrum: Vec<[f64; 2]>,
}

pub fn stampfli_point_json(matrix: &str) -> Result<String, String> {
    let a = parse(matrix)?;
    let r = st_dispatch(&a, DEFAULT_TOL).map_err(|e| e.to_string())?;
    to_json(&PointOut {
        point: [r.point.re, r.point.im],
        min_norm: r.min_norm,
        method: r.method.to_string(),
        certificate_margin: r.certificate_margin,
        spectrum: pairs(&eigenvalues(&a).map_err(|e| e.to_string())?),
    })
}

#[derive(Serialize)]
struct RangeOut {
    boundary: Vec<[f64; 2]>,
    /// `St + W₀(A − St·I)`, drawn in the coordinates of `W(A)`.
    w0: Vec<[f64; 2]>,
    eigenvalues: Vec<[f64; 2]>,
    st: [f64; 2],
    min_norm: f64,
    method: String,
}

pub fn numerical_range_json(matrix: &str, samples: usize) -> Result<String, String> {
    if !(MIN_SAMPLES..=MAX_SAMPLES).contains(&samples) {
        return Err(format!("samples must lie in {MIN_SAMPLES}..={MAX_SAMPLES}"));
    }
    let a = parse(matrix)?;
    let err = |e: stampfli::Error| e.to_string();
    let w = nr_boundary(&a, samples).map_err(err)?;
    let r = st_dispatch(&a, DEFAULT_TOL).map_err(err)?;
    let shifted = a.shifted(r.point);
    let w0 = if shifted.max_abs() == 0.0 {
        vec![r.point]
    } else {
        let region = max_numerical_range(&shifted, samples).map_err(err)?;
        region.witness_points.iter().map(|z| z + r.point).collect()
    };
    to_json(&RangeOut {
        boundary: pairs(&w.witness_points),
        w0: pairs(&w0),
        eigenvalues: pairs(&eigenvalues(&a).map_err(err)?),
        st: [r.point.re, r.point.im],
        min_norm: r.min_norm,
        method: r.method.to_string(),
    })
}

#[derive(Serialize)]
struct ProfileOut {
    nx: usize,
    ny: usize,
    /// Row-major from the `(re_min, im_min)` corner, `im` varying slowest.
    values: Vec<f64>,
    min: f64,
    max: f64,
}

/// `‖A − λI‖` on an `nx × ny` grid over the given rectangle.
pub fn norm_profile_json(
    matrix: &str,
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    nx: usize,
    ny: usize,
) -> Result<String, String> {
    if nx < 2 || ny < 2 || nx * ny > MAX_PROFILE_CELLS {
        return Err(format!(
            "grid must be at least 2×2 and at most {MAX_PROFILE_CELLS} cells"
        ));
    }
    if !(re_min < re_max && im_min < im_max) {
        return Err("empty rectangle".into());
    }
    let a = parse(matrix)?;
    let step = |lo: f64, hi: f64, k: usize, m: usize| lo + (hi - lo) * k as f64 / (m - 1) as f64;
    let points: Vec<Complex64> = (0..ny)
        .flat_map(|j| {
            (0..nx).map(move |i| {
                Complex64::new(step(re_min, re_max, i, nx), step(im_min, im_max, j, ny))
            })
        })
        .collect();
    let values = f_profile(&a, &points).map_err(|e| e.to_string())?;
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    to_json(&ProfileOut {
        nx,
        ny,
        values,
        min,
        max,
    })
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn stampfli_point(matrix: &str) -> Result<String, JsValue> {
    js(stampfli_point_json(matrix))
}

#[wasm_bindgen]
pub fn numerical_range(matrix: &str, samples: usize) -> Result<String, JsValue> {
    js(numerical_range_json(matrix, samples))
}

#[wasm_bindgen]
pub fn norm_profile(
    matrix: &str,
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    nx: usize,
    ny: usize,
) -> Result<String, JsValue> {
    js(norm_profile_json(
        matrix, re_min, re_max, im_min, im_max, nx, ny,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    const JORDAN: &str = r#"{"n":2,"data":[[[0,0],[1,0]],[[0,0],[0,0]]]}"#;
    const EXAMPLE3: &str =
        r#"{"n":3,"data":[[[0,0],[4,0],[-2,0]],[[0,0],[0,0],[4,0]],[[0,0],[0,0],[0,0]]]}"#;

    fn value(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn point_of_example3() {
        let v = value(stampfli_point_json(EXAMPLE3));
        assert!((v["point"][0].as_f64().unwrap() + 12.0 / 11.0).abs() < 1e-9);
        assert_eq!(v["method"], "singleton3_toe");
        assert_eq!(v["spectrum"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn range_of_jordan_block() {
        let v = value(numerical_range_json(JORDAN, 64));
        let b = v["boundary"].as_array().unwrap();
        assert_eq!(b.len(), 64);
        for p in b {
            let r = p[0].as_f64().unwrap().hypot(p[1].as_f64().unwrap());
            assert!((r - 0.5).abs() < 1e-9);
        }
        // St = 0 and W₀(A) = {0}
        for p in v["w0"].as_array().unwrap() {
            assert!(p[0].as_f64().unwrap().abs() < 1e-9 && p[1].as_f64().unwrap().abs() < 1e-9);
        }
    }

    #[test]
    fn w0_contains_st_for_scalar_matrix() {
        let v = value(numerical_range_json(
            r#"{"n":2,"data":[[[3,1],[0,0]],[[0,0],[3,1]]]}"#,
            16,
        ));
        assert_eq!(v["w0"].as_array().unwrap().len(), 1);
        assert_eq!(v["st"][0], 3.0);
    }

    #[test]
    fn profile_minimum_at_st() {
        let v = value(norm_profile_json(JORDAN, -1.0, 1.0, -1.0, 1.0, 21, 21));
        let values: Vec<f64> = v["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_f64().unwrap())
            .collect();
        assert_eq!(values.len(), 441);
        // centre cell is λ = 0 where ‖A‖ = 1 is minimal
        assert!((values[220] - 1.0).abs() < 1e-12);
        assert_eq!(v["min"].as_f64().unwrap(), values[220]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(stampfli_point_json("{").is_err());
        assert!(stampfli_point_json(r#"{"n":2,"data":[[[1,0]]]}"#).is_err());
        assert!(numerical_range_json(JORDAN, 4).is_err());
        assert!(norm_profile_json(JORDAN, 1.0, 0.0, 0.0, 1.0, 10, 10).is_err());
        assert!(norm_profile_json(JORDAN, 0.0, 1.0, 0.0, 1.0, 1000, 1000).is_err());
    }
}
