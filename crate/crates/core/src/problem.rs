//! Problem files: a JSON object whose scalars are strings, so every value is
//! read and written exactly.
//!
//! ```json
//! {
//!   "n": 1, "K": 1,
//!   "A0": [["2"]],
//!   "A": [[["1"]]],
//!   "p": [["-1/2", "0.5"]],
//!   "b0": ["1"]
//! }
//! ```
//!
//! `b0` and `b` (one vector per parameter) are optional; `b` defaults to zero.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{ParametricLinearSystem, ParametricMatrix};
use crate::scalar::{parse_scalar, Interval, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    n: usize,
    #[serde(rename = "K")]
    k: usize,
    #[serde(rename = "A0")]
    a0: Vec<Vec<String>>,
    #[serde(rename = "A")]
    a: Vec<Vec<Vec<String>>>,
    p: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b0: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub n: usize,
    pub k: usize,
    pub a0: Matrix,
    pub a: Vec<Matrix>,
    pub p: Vec<Interval>,
    pub b0: Option<Vec<Rational>>,
    pub b: Option<Vec<Vec<Rational>>>,
}

fn err(path: impl Into<String>, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.into(),
        msg: msg.into(),
    }
}

fn scalar(path: &str, text: &str) -> Result<Rational> {
    parse_scalar(text).ok_or_else(|| err(path, format!("unparseable scalar {text:?}")))
}

fn vector(path: &str, items: &[String], len: usize) -> Result<Vec<Rational>> {
    if items.len() != len {
        return Err(err(path, format!("expected {len} entries, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, s)| scalar(&format!("{path}[{i}]"), s))
        .collect()
}

fn matrix(path: &str, rows: &[Vec<String>], n: usize) -> Result<Matrix> {
    if rows.len() != n {
        return Err(err(path, format!("expected {n} rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(&format!("{path}[{i}]"), r, n))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(|e| err(path, e.to_string()))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawProblem = serde_json::from_str(text).map_err(|e| err("$", e.to_string()))?;
        let (n, k) = (raw.n, raw.k);
        if n == 0 {
            return Err(err("n", "dimension must be positive"));
        }
        let a0 = matrix("A0", &raw.a0, n)?;
        if raw.a.len() != k {
            return Err(err("A", format!("expected K = {k} matrices, found {}", raw.a.len())));
        }
        let a = raw
            .a
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(&format!("A[{i}]"), m, n))
            .collect::<Result<Vec<_>>>()?;
        if raw.p.len() != k {
            return Err(err("p", format!("expected K = {k} intervals, found {}", raw.p.len())));
        }
        let p = raw
            .p
            .iter()
            .enumerate()
            .map(|(i, pair)| {
                let path = format!("p[{i}]");
                let v = vector(&path, pair, 2)?;
                let [lo, hi]: [Rational; 2] = v.try_into().expect("two entries");
                Interval::try_new(lo, hi).ok_or_else(|| err(path, "lower endpoint exceeds upper endpoint"))
            })
            .collect::<Result<Vec<_>>>()?;
        let b0 = raw.b0.as_ref().map(|v| vector("b0", v, n)).transpose()?;
        let b = match &raw.b {
            None => None,
            Some(_) if b0.is_none() => return Err(err("b", "b requires b0")),
            Some(vs) => {
                if vs.len() != k {
                    return Err(err("b", format!("expected K = {k} vectors, found {}", vs.len())));
                }
                Some(
                    vs.iter()
                        .enumerate()
                        .map(|(i, v)| vector(&format!("b[{i}]"), v, n))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        Ok(Self { n, k, a0, a, p, b0, b })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| err(path.display().to_string(), e.to_string()))?;
        Self::parse(&text)
    }

    /// Canonical text: pretty JSON with every scalar in lowest terms.
    pub fn to_json(&self) -> String {
        let mat = |m: &Matrix| m.to_rows().iter().map(|r| strings(r)).collect::<Vec<_>>();
        let raw = RawProblem {
            n: self.n,
            k: self.k,
            a0: mat(&self.a0),
            a: self.a.iter().map(mat).collect(),
            p: self
                .p
                .iter()
                .map(|iv| vec![iv.lo().to_string(), iv.hi().to_string()])
                .collect(),
            b0: self.b0.as_deref().map(strings),
            b: self.b.as_ref().map(|vs| vs.iter().map(|v| strings(v)).collect()),
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }

    pub fn from_matrix(pm: &ParametricMatrix) -> Self {
        Self {
            n: pm.dim(),
            k: pm.param_count(),
            a0: pm.a0().clone(),
            a: pm.coeffs().to_vec(),
            p: pm.params().to_vec(),
            b0: None,
            b: None,
        }
    }

    pub fn from_system(sys: &ParametricLinearSystem) -> Self {
        Self {
            b0: Some(sys.b0().to_vec()),
            b: Some(sys.b().to_vec()),
            ..Self::from_matrix(sys.matrix())
        }
    }

    pub fn matrix(&self) -> Result<ParametricMatrix> {
        ParametricMatrix::new(self.a0.clone(), self.a.clone(), self.p.clone())
    }

    /// The linear system, or `None` when the file has no right-hand side.
    pub fn system(&self) -> Result<Option<ParametricLinearSystem>> {
        let Some(b0) = &self.b0 else {
            return Ok(None);
        };
        let pm = self.matrix()?;
        let sys = match &self.b {
            Some(b) => ParametricLinearSystem::new(pm, b0.clone(), b.clone())?,
            None => ParametricLinearSystem::with_constant_rhs(pm, b0.clone())?,
        };
        Ok(Some(sys))
    }
}
