//! Matrix Market coordinate files.
//!
//! Accepted headers: `%%MatrixMarket matrix coordinate {real|integer|pattern}
//! {general|symmetric}`. Symmetric files may list either triangle. General
//! files must be numerically symmetric after duplicate summing.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Real,
    Integer,
    Pattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_header(line: &str) -> Result<(Field, Symmetry)> {
    let tokens: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(parse_err(1, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'"));
    }
    if tokens[1] != "matrix" {
        return Err(Error::Unsupported(format!("object '{}'", tokens[1])));
    }
    if tokens[2] != "coordinate" {
        return Err(Error::Unsupported(format!("format '{}'", tokens[2])));
    }
    let field = match tokens[3].as_str() {
        "real" | "double" => Field::Real,
        "integer" => Field::Integer,
        "pattern" => Field::Pattern,
        other => return Err(Error::Unsupported(format!("field '{other}'"))),
    };
    let symmetry = match tokens[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        other => return Err(Error::Unsupported(format!("symmetry '{other}'"))),
    };
    Ok((field, symmetry))
}

pub fn parse_matrix_market(text: &str) -> Result<CsrMatrix> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (field, symmetry) = parse_header(header)?;

    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (size_line, size) = body.next().ok_or_else(|| parse_err(2, "missing size line"))?;
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_err(size_line, "size line must hold three non-negative integers"))?;
    let [rows, cols, nnz] = dims[..] else {
        return Err(parse_err(size_line, "size line must hold three non-negative integers"));
    };
    if rows != cols {
        return Err(parse_err(size_line, format!("matrix is {rows} x {cols}, not square")));
    }
    let n = rows;

    let mut entries = Vec::with_capacity(nnz * 2);
    let mut count = 0;
    for (line, l) in body {
        if count == nnz {
            return Err(parse_err(line, format!("more than {nnz} entries")));
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        let want = if field == Field::Pattern { 2 } else { 3 };
        if toks.len() != want {
            return Err(parse_err(line, format!("expected {want} fields, found {}", toks.len())));
        }
        let index = |t: &str| -> Result<usize> {
            let v: usize = t.parse().map_err(|_| parse_err(line, format!("bad index '{t}'")))?;
            if v == 0 || v > n {
                return Err(parse_err(line, format!("index {v} out of range 1..={n}")));
            }
            Ok(v - 1)
        };
        let (i, j) = (index(toks[0])?, index(toks[1])?);
        let v = match field {
            Field::Pattern => 1.0,
            Field::Integer => toks[2]
                .parse::<i64>()
                .map_err(|_| parse_err(line, format!("bad integer '{}'", toks[2])))? as f64,
            Field::Real => {
                let v: f64 = toks[2]
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad value '{}'", toks[2])))?;
                if !v.is_finite() {
                    return Err(parse_err(line, "non-finite value"));
                }
                v
            }
        };
        entries.push((i, j, v));
        if symmetry == Symmetry::Symmetric && i != j {
            entries.push((j, i, v));
        }
        count += 1;
    }
    if count != nnz {
        return Err(parse_err(text.lines().count(), format!("expected {nnz} entries, found {count}")));
    }

    if symmetry == Symmetry::General {
        let mut summed: HashMap<(usize, usize), f64> = HashMap::with_capacity(entries.len());
        for &(i, j, v) in &entries {
            *summed.entry((i, j)).or_insert(0.0) += v;
        }
        for (&(i, j), &v) in &summed {
            let mirror = summed.get(&(j, i)).copied().unwrap_or(0.0);
            if mirror != v {
                return Err(Error::NotSymmetric(format!(
                    "entry ({}, {}) = {v} but its mirror is {mirror}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    CsrMatrix::from_triplets(n, &entries)
}

pub fn read_matrix_market(path: &Path) -> Result<CsrMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_matrix_market(&text)
}

/// Emits the lower triangle as a `real symmetric` coordinate file, explicit
/// zeros included. Assumes numerically symmetric values.
pub fn write_matrix_market(a: &CsrMatrix) -> String {
    let lower: Vec<_> = a.triplets().filter(|&(r, c, _)| c <= r).collect();
    let mut out = String::from("%%MatrixMarket matrix coordinate real symmetric\n");
    let _ = writeln!(out, "{} {} {}", a.n(), a.n(), lower.len());
    for (r, c, v) in lower {
        let _ = writeln!(out, "{} {} {:?}", r + 1, c + 1, v);
    }
    out
}
