//! JSON matrix files: `{"n": 2, "data": [[[re, im], [re, im]], [[re, im], [re, im]]]}`.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use stampfli::{CMatrix, Complex64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(a: &CMatrix) -> Self {
        let n = a.dim();
        let data = (0..n)
            .map(|i| a.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        Self { n, data }
    }

    pub fn to_matrix(&self) -> Result<CMatrix> {
        if self.n == 0 {
            bail!("matrix dimension must be positive");
        }
        if self.data.len() != self.n {
            bail!("expected {} rows, found {}", self.n, self.data.len());
        }
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (i, row) in self.data.iter().enumerate() {
            if row.len() != self.n {
                bail!("row {i} has {} entries, expected {}", row.len(), self.n);
            }
            for (j, &[re, im]) in row.iter().enumerate() {
                if !re.is_finite() || !im.is_finite() {
                    bail!("entry ({i},{j}) is not finite");
                }
                entries.push(Complex64::new(re, im));
            }
        }
        Ok(CMatrix::new(self.n, entries)?)
    }
}

pub fn parse_matrix(text: &str) -> Result<CMatrix> {
    let file: MatrixFile = serde_json::from_str(text).context("malformed matrix file")?;
    file.to_matrix()
}

pub fn read_matrix(path: &Path) -> Result<CMatrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_matrix(&text).with_context(|| format!("in {}", path.display()))
}
