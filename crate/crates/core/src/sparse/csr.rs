use crate::error::{Error, Result};

/// Immutable compressed-sparse-row storage for a structurally symmetric
/// matrix. Both triangles are stored and every diagonal position is present,
/// possibly as an explicit zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<f64>,
    diag_pos: Vec<usize>,
}

impl CsrMatrix {
    /// Assembles a matrix from `(row, col, value)` triplets.
    ///
    /// Duplicates are summed. An entry whose mirror position is absent gets
    /// its mirror filled with the same value, so a single triangle is enough
    /// to describe a symmetric matrix. Missing diagonal positions are stored
    /// as explicit zeros.
    pub fn from_triplets(n: usize, entries: &[(usize, usize, f64)]) -> Result<Self> {
        for &(row, col, v) in entries {
            if row >= n || col >= n {
                return Err(Error::IndexOutOfRange { row, col, n });
            }
            if !v.is_finite() {
                return Err(Error::NonFiniteInput { row, col });
            }
        }

        let mut sorted: Vec<(usize, usize, f64)> = entries.to_vec();
        sorted.sort_by_key(|e| (e.0, e.1));
        let mut summed: Vec<(usize, usize, f64)> = Vec::with_capacity(sorted.len());
        for (r, c, v) in sorted {
            match summed.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => summed.push((r, c, v)),
            }
        }

        let mut all = summed.clone();
        for &(r, c, v) in &summed {
            if r != c
                && summed
                    .binary_search_by(|e| (e.0, e.1).cmp(&(c, r)))
                    .is_err()
            {
                all.push((c, r, v));
            }
        }
        for i in 0..n {
            if summed.binary_search_by(|e| (e.0, e.1).cmp(&(i, i))).is_err() {
                all.push((i, i, 0.0));
            }
        }
        all.sort_by_key(|e| (e.0, e.1));

        let mut row_ptr = vec![0usize; n + 1];
        let mut col_idx = Vec::with_capacity(all.len());
        let mut values = Vec::with_capacity(all.len());
        for &(r, c, v) in &all {
            row_ptr[r + 1] += 1;
            col_idx.push(c);
            values.push(v);
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        Self::from_raw_parts(n, row_ptr, col_idx, values)
    }

    /// Wraps existing CSR arrays after checking every structural invariant.
    pub fn from_raw_parts(
        n: usize,
        row_ptr: Vec<usize>,
        col_idx: Vec<usize>,
        values: Vec<f64>,
    ) -> Result<Self> {
        if row_ptr.len() != n + 1 || row_ptr[0] != 0 {
            return Err(Error::MalformedCsr("row_ptr must have length n+1 and start at 0".into()));
        }
        if row_ptr[n] != col_idx.len() || col_idx.len() != values.len() {
            return Err(Error::MalformedCsr("row_ptr[n] must equal nnz".into()));
        }
        let mut diag_pos = vec![usize::MAX; n];
        for i in 0..n {
            if row_ptr[i] > row_ptr[i + 1] {
                return Err(Error::MalformedCsr(format!("row_ptr decreases at row {i}")));
            }
            let cols = &col_idx[row_ptr[i]..row_ptr[i + 1]];
            for (k, &c) in cols.iter().enumerate() {
                if c >= n {
                    return Err(Error::IndexOutOfRange { row: i, col: c, n });
                }
                if k > 0 && cols[k - 1] >= c {
                    return Err(Error::MalformedCsr(format!(
                        "columns of row {i} are not strictly increasing"
                    )));
                }
                if c == i {
                    diag_pos[i] = row_ptr[i] + k;
                }
            }
            if diag_pos[i] == usize::MAX {
                return Err(Error::MalformedCsr(format!("row {i} has no diagonal entry")));
            }
        }
        for (p, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                let row = row_ptr.partition_point(|&q| q <= p) - 1;
                return Err(Error::NonFiniteInput { row, col: col_idx[p] });
            }
        }
        let a = CsrMatrix { n, row_ptr, col_idx, values, diag_pos };
        for i in 0..n {
            for &c in a.row_cols(i) {
                if a.position(c, i).is_none() {
                    return Err(Error::MalformedCsr(format!(
                        "pattern is not symmetric: ({i}, {c}) has no mirror"
                    )));
                }
            }
        }
        Ok(a)
    }

    pub fn identity(n: usize) -> Self {
        let entries: Vec<_> = (0..n).map(|i| (i, i, 1.0)).collect();
        Self::from_triplets(n, &entries).expect("identity is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.col_idx.len()
    }

    pub fn row_ptr(&self) -> &[usize] {
        &self.row_ptr
    }

    pub fn col_idx(&self) -> &[usize] {
        &self.col_idx
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn row_nnz(&self, i: usize) -> usize {
        self.row_ptr[i + 1] - self.row_ptr[i]
    }

    pub fn row_cols(&self, i: usize) -> &[usize] {
        &self.col_idx[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    pub fn row_values(&self, i: usize) -> &[f64] {
        &self.values[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.row_cols(i)
            .iter()
            .copied()
            .zip(self.row_values(i).iter().copied())
    }

    pub fn diagonal(&self, i: usize) -> f64 {
        self.values[self.diag_pos[i]]
    }

    /// Storage offset of `(row, col)`, if that position is in the pattern.
    pub fn position(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.row_ptr[row];
        self.row_cols(row).binary_search(&col).ok().map(|k| start + k)
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.position(row, col).map_or(0.0, |p| self.values[p])
    }

    /// All stored entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| self.row(i).map(move |(c, v)| (i, c, v)))
    }

    /// Maximum absolute column sum. Equals the maximum row sum when the
    /// values are symmetric.
    pub fn one_norm(&self) -> f64 {
        let mut sums = vec![0.0f64; self.n];
        for (&c, &v) in self.col_idx.iter().zip(&self.values) {
            sums[c] += v.abs();
        }
        sums.into_iter().fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Returns `A - xI`. The pattern is unchanged because every diagonal is stored.
    pub fn shift(&self, x: f64) -> CsrMatrix {
        let mut out = self.clone();
        out.shift_in_place(self, x);
        out
    }

    /// Overwrites `self`'s values with those of `base - xI`. Both matrices
    /// must share a pattern.
    pub(crate) fn shift_in_place(&mut self, base: &CsrMatrix, x: f64) {
        debug_assert_eq!(self.col_idx, base.col_idx);
        self.values.copy_from_slice(&base.values);
        for &p in &self.diag_pos {
            self.values[p] -= x;
        }
    }

    /// Exact mirror-equality check on the stored values.
    pub fn is_numerically_symmetric(&self) -> bool {
        self.triplets().all(|(r, c, v)| self.get(c, r) == v)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut d = vec![vec![0.0; self.n]; self.n];
        for (r, c, v) in self.triplets() {
            d[r][c] = v;
        }
        d
    }
}
