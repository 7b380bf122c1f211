//! Quadric-family file format: a JSON document with fields `n`, `k`, and
//! `matrices` — a list of `k` row-major `n × n` arrays whose entries are
//! integers or rational strings `"p/q"`.

use serde::Deserialize;

use cliffspace::clifford::QuadricFamily;
use cliffspace::linalg::{parse_rational, rat_int, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    n: usize,
    k: usize,
    matrices: Vec<Vec<Vec<Entry>>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Rational(String),
}

impl Entry {
    fn to_rational(&self) -> Result<Rational, String> {
        match self {
            Entry::Int(v) => Ok(rat_int(*v)),
            Entry::Rational(s) => parse_rational(s).map_err(|e| e.to_string()),
        }
    }
}

/// Parse and validate a family file. Errors carry the JSON line/column for
/// syntax problems and name the offending matrix for validation problems.
pub fn parse_family_file(path: &std::path::Path) -> Result<QuadricFamily, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: FamilyFile = serde_json::from_str(&text)
        .map_err(|e| format!("{}: parse error at line {}, column {}: {e}", path.display(), e.line(), e.column()))?;
    if file.matrices.len() != file.k {
        return Err(format!(
            "family declares k = {} but provides {} matrices",
            file.k,
            file.matrices.len()
        ));
    }
    let mut basis = Vec::with_capacity(file.k);
    for (idx, rows) in file.matrices.iter().enumerate() {
        if rows.len() != file.n || rows.iter().any(|r| r.len() != file.n) {
            return Err(format!("matrix {idx} is not {0}×{0}", file.n));
        }
        let mut matrix = Vec::with_capacity(file.n);
        for row in rows {
            let mut out = Vec::with_capacity(file.n);
            for entry in row {
                out.push(entry.to_rational().map_err(|e| format!("matrix {idx}: {e}"))?);
            }
            matrix.push(out);
        }
        basis.push(matrix);
    }
    QuadricFamily::new(file.n, basis).map_err(|e| e.to_string())
}
