use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;

/// Symmetric reordering: row/column `i` of `PAPᵀ` is row/column `p[i]` of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    p: Vec<usize>,
}

impl Permutation {
    pub fn new(p: Vec<usize>) -> Result<Self> {
        let n = p.len();
        let mut seen = vec![false; n];
        for (i, &v) in p.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidPermutation(format!("entry {i} is {v}, out of range for n = {n}")));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} appears twice")));
            }
            seen[v] = true;
        }
        Ok(Permutation { p })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { p: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.p
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.p.len()];
        for (i, &v) in self.p.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { p: inv }
    }

    /// Parses one 0-based index per line; blank lines are ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut p = Vec::with_capacity(n);
        for (k, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let v: usize = t.parse().map_err(|_| Error::Parse {
                line: k + 1,
                msg: format!("expected a non-negative integer, found '{t}'"),
            })?;
            p.push(v);
        }
        if p.len() != n {
            return Err(Error::InvalidPermutation(format!("expected {n} entries, found {}", p.len())));
        }
        Self::new(p)
    }

    pub fn read(path: &std::path::Path, n: usize) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Self::parse(&text, n)
    }
}

/// Returns `PAPᵀ`.
pub fn apply_ordering(a: &CsrMatrix, perm: &Permutation) -> Result<CsrMatrix> {
    let n = a.n();
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "permutation has length {}, matrix has order {n}",
            perm.len()
        )));
    }
    let inv = perm.inverse();
    let mut row_ptr = Vec::with_capacity(n + 1);
    let mut cols = Vec::with_capacity(a.nnz());
    let mut vals = Vec::with_capacity(a.nnz());
    let mut buf: Vec<(usize, f64)> = Vec::new();
    row_ptr.push(0);
    for &old in perm.as_slice() {
        buf.clear();
        buf.extend(a.row(old).map(|(c, v)| (inv.p[c], v)));
        buf.sort_unstable_by_key(|e| e.0);
        for &(c, v) in &buf {
            cols.push(c);
            vals.push(v);
        }
        row_ptr.push(cols.len());
    }
    CsrMatrix::from_raw_parts(n, row_ptr, cols, vals)
}
