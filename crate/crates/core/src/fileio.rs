//! The on-disk algebra and linear-map formats.
//!
//! Algebra files are UTF-8 JSON documents:
//!
//! ```json
//! {
//!   "field": {"kind": "Q"},
//!   "dim": 2,
//!   "brackets": [
//!     {"left": 2, "right": 2, "value": [{"index": 1, "coeff": "1"}]}
//!   ]
//! }
//! ```
//!
//! Indices are 1-based, unlisted brackets are zero, and coefficients are
//! exact literals: `a` or a reduced `a/b` with positive denominator over Q,
//! a residue in `[0, p)` over F_p (`{"kind": "Fp", "p": 5}`). Emission is
//! canonical — sorted brackets, zero terms omitted — so emit ∘ parse ∘ emit
//! is emit.
//!
//! Map files hold one matrix of coefficient literals; columns are the
//! images of the source basis vectors.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::dynamic::AnyAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldDesc, Fp, Rat, Scalar};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
enum FieldJson {
    Q,
    Fp { p: u32 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermJson {
    index: usize,
    coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct BracketJson {
    left: usize,
    right: usize,
    value: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AlgebraJson {
    field: FieldJson,
    dim: usize,
    brackets: Vec<BracketJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MapJson {
    matrix: Vec<Vec<String>>,
}

fn parse_field(fj: &FieldJson) -> Result<FieldDesc> {
    match fj {
        FieldJson::Q => Ok(FieldDesc::Rationals),
        FieldJson::Fp { p } => FieldDesc::prime(*p),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse {
        locus: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn build<K: Scalar>(field: FieldDesc, doc: &AlgebraJson) -> Result<Algebra<K>> {
    let dim = doc.dim;
    let mut seen = std::collections::BTreeSet::new();
    let mut brackets = Vec::new();
    for (bi, b) in doc.brackets.iter().enumerate() {
        let locus = format!("brackets[{bi}]");
        let check_index = |ix: usize, what: &str| -> Result<usize> {
            if ix == 0 || ix > dim {
                Err(Error::Parse {
                    locus: locus.clone(),
                    message: format!("{what} index {ix} out of range 1..={dim}"),
                })
            } else {
                Ok(ix - 1)
            }
        };
        let left = check_index(b.left, "left")?;
        let right = check_index(b.right, "right")?;
        if !seen.insert((left, right)) {
            return Err(Error::Parse {
                locus,
                message: format!("duplicate bracket for ({}, {})", b.left, b.right),
            });
        }
        let mut terms = Vec::new();
        let mut seen_terms = std::collections::BTreeSet::new();
        for (ti, t) in b.value.iter().enumerate() {
            let locus = format!("{locus}.value[{ti}]");
            let index = check_index(t.index, "result")?;
            if !seen_terms.insert(index) {
                return Err(Error::Parse {
                    locus,
                    message: format!("duplicate result index {}", t.index),
                });
            }
            let coeff = K::parse(&field, &t.coeff).map_err(|e| Error::Parse {
                locus,
                message: e.to_string(),
            })?;
            if !coeff.is_zero() {
                terms.push((index, coeff));
            }
        }
        brackets.push(((left, right), terms));
    }
    let alg = Algebra::from_brackets(field, dim, &brackets)?;
    Ok(match &doc.labels {
        Some(labels) => {
            if labels.len() != dim {
                return Err(Error::Parse {
                    locus: "labels".into(),
                    message: format!("expected {} labels, found {}", dim, labels.len()),
                });
            }
            alg.with_labels(labels.clone())
        }
        None => alg,
    })
}

/// Parse an algebra document.
pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let doc: AlgebraJson = serde_json::from_str(text).map_err(json_err)?;
    let field = parse_field(&doc.field)?;
    Ok(match field {
        FieldDesc::Rationals => AnyAlgebra::Q(build::<Rat>(field, &doc)?),
        FieldDesc::PrimeField { .. } => AnyAlgebra::P(build::<Fp>(field, &doc)?),
    })
}

fn emit_doc<K: Scalar>(alg: &Algebra<K>) -> AlgebraJson {
    let field = match alg.field() {
        FieldDesc::Rationals => FieldJson::Q,
        FieldDesc::PrimeField { p } => FieldJson::Fp { p },
    };
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let value: Vec<TermJson> = alg
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| TermJson {
                    index: k + 1,
                    coeff: c.literal(),
                })
                .collect();
            if !value.is_empty() {
                brackets.push(BracketJson {
                    left: i + 1,
                    right: j + 1,
                    value,
                });
            }
        }
    }
    AlgebraJson {
        field,
        dim: n,
        brackets,
        labels: alg.labels().map(|l| l.to_vec()),
    }
}

/// Canonical serialization of an algebra.
pub fn emit_algebra(alg: &AnyAlgebra) -> String {
    let doc = match alg {
        AnyAlgebra::Q(a) => emit_doc(a),
        AnyAlgebra::P(a) => emit_doc(a),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// Parse a map file into a matrix over the given field. Columns are the
/// images of the source basis vectors.
pub fn parse_map_any(text: &str, field: &FieldDesc) -> Result<AnyMatrix> {
    Ok(match field {
        FieldDesc::Rationals => AnyMatrix::Q(parse_map::<Rat>(text, field)?),
        FieldDesc::PrimeField { .. } => AnyMatrix::P(parse_map::<Fp>(text, field)?),
    })
}

pub enum AnyMatrix {
    Q(Matrix<Rat>),
    P(Matrix<Fp>),
}

pub fn parse_map<K: Scalar>(text: &str, field: &FieldDesc) -> Result<Matrix<K>> {
    let doc: MapJson = serde_json::from_str(text).map_err(json_err)?;
    if doc.matrix.is_empty() {
        return Err(Error::Parse {
            locus: "matrix".into(),
            message: "empty matrix".into(),
        });
    }
    let rows = doc.matrix.len();
    let cols = doc.matrix[0].len();
    let mut entries = Vec::with_capacity(rows);
    for (ri, row) in doc.matrix.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Parse {
                locus: format!("matrix[{ri}]"),
                message: "ragged rows".into(),
            });
        }
        let mut out = Vec::with_capacity(cols);
        for (ci, lit) in row.iter().enumerate() {
            out.push(K::parse(field, lit).map_err(|e| Error::Parse {
                locus: format!("matrix[{ri}][{ci}]"),
                message: e.to_string(),
            })?);
        }
        entries.push(out);
    }
    Ok(Matrix::from_rows(*field, cols, entries))
}

pub fn emit_map<K: Scalar>(m: &Matrix<K>) -> String {
    let doc = MapJson {
        matrix: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.at(r, c).literal()).collect())
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}
