//! The JSON recurrence file: `{"p": 2, "s": 1, "matrices": [[["1","2"],["3","4"]]]}`.
//!
//! Every matrix entry is a string `"a"` or `"a/b"` so no JSON reader can
//! round it through floating point.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{format_rational, parse_rational, ParseRationalError};
use crate::kneading::{CoeffMatrix, RecurrenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub p: usize,
    pub s: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("malformed spec file at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("matrix A_{matrix}, entry ({row},{col}): {source}")]
    Entry {
        matrix: usize,
        row: usize,
        col: usize,
        source: ParseRationalError,
    },
}

impl From<serde_json::Error> for SpecError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; report the bare message
        let full = e.to_string();
        let message = full
            .rfind(" at line ")
            .map_or(full.as_str(), |i| &full[..i])
            .to_string();
        SpecError::Json {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

impl SpecFile {
    pub fn validate(&self) -> Result<RecurrenceSpec, SpecError> {
        let (p, s) = (self.p, self.s);
        if p == 0 {
            return Err(SpecError::Invalid("p must be ≥ 1".into()));
        }
        if s == 0 {
            return Err(SpecError::Invalid("s must be ≥ 1".into()));
        }
        if self.matrices.len() != s {
            return Err(SpecError::Invalid(format!(
                "expected {s} matrices, found {}",
                self.matrices.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(s);
        for (k, grid) in self.matrices.iter().enumerate() {
            if grid.len() != p {
                return Err(SpecError::Invalid(format!(
                    "matrix A_{k} has {} rows, expected {p}",
                    grid.len()
                )));
            }
            let mut rows = Vec::with_capacity(p);
            for (i, row) in grid.iter().enumerate() {
                if row.len() != p {
                    return Err(SpecError::Invalid(format!(
                        "matrix A_{k}, row {}: has {} entries, expected {p}",
                        i + 1,
                        row.len()
                    )));
                }
                let parsed = row
                    .iter()
                    .enumerate()
                    .map(|(j, text)| {
                        parse_rational(text).map_err(|source| SpecError::Entry {
                            matrix: k,
                            row: i + 1,
                            col: j + 1,
                            source,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(parsed);
            }
            coeffs.push(CoeffMatrix::from_rows(rows).expect("shape checked"));
        }
        Ok(RecurrenceSpec::new(p, s, coeffs).expect("shape checked"))
    }

    pub fn from_spec(spec: &RecurrenceSpec) -> Self {
        Self {
            p: spec.p(),
            s: spec.s(),
            matrices: spec
                .coeffs()
                .iter()
                .map(|m| m.rows().map(|r| r.iter().map(format_rational).collect()).collect())
                .collect(),
        }
    }
}

pub fn parse_spec(text: &str) -> Result<RecurrenceSpec, SpecError> {
    let file: SpecFile = serde_json::from_str(text)?;
    file.validate()
}

pub fn render_spec(spec: &RecurrenceSpec) -> String {
    serde_json::to_string(&SpecFile::from_spec(spec)).expect("spec files always serialize")
}
