use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;

/// Dense symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSym {
    n: usize,
    data: Vec<f64>,
}

impl DenseSym {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries, got {}",
                n * n,
                data.len()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let v = data[i * n + j];
                if !v.is_finite() {
                    return Err(Error::NonFiniteInput { row: i, col: j });
                }
                if v != data[j * n + i] {
                    return Err(Error::NotSymmetric(format!("entry ({i}, {j}) differs from its mirror")));
                }
            }
        }
        Ok(DenseSym { n, data })
    }

    /// Builds from the lower triangle: `f(i, j)` is called for `j <= i`.
    pub fn from_lower(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        DenseSym { n, data }
    }

    /// Symmetrizes a general row-major matrix as `(M + Mᵀ) / 2`.
    pub fn symmetrize(n: usize, m: &[f64]) -> Self {
        Self::from_lower(n, |i, j| 0.5 * (m[i * n + j] + m[j * n + i]))
    }

    pub fn from_diagonal(d: &[f64]) -> Self {
        Self::from_lower(d.len(), |i, j| if i == j { d[i] } else { 0.0 })
    }

    pub fn from_csr(a: &CsrMatrix) -> Result<Self> {
        let n = a.n();
        let mut data = vec![0.0; n * n];
        for (r, c, v) in a.triplets() {
            data[r * n + c] = v;
        }
        Self::new(n, data)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Every entry stored, zeros included.
    pub fn to_csr(&self) -> CsrMatrix {
        self.csr_filtered(|_, _, _| true)
    }

    /// Off-diagonal zeros dropped.
    pub fn to_csr_sparse(&self) -> CsrMatrix {
        self.csr_filtered(|i, j, v| i == j || v != 0.0)
    }

    fn csr_filtered(&self, keep: impl Fn(usize, usize, f64) -> bool) -> CsrMatrix {
        let n = self.n;
        let mut row_ptr = vec![0];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if keep(i, j, v) {
                    cols.push(j);
                    vals.push(v);
                }
            }
            row_ptr.push(cols.len());
        }
        CsrMatrix::from_raw_parts(n, row_ptr, cols, vals).expect("dense symmetric is valid CSR")
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn one_norm(&self) -> f64 {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseInertia {
    pub nu: usize,
    pub singular: bool,
    pub interchanges: usize,
}

/// Row-by-row pairwise pivoting on a dense copy, following the textbook
/// formulation directly. Zero conventions match the sparse elementary
/// variant: zero entries are skipped, `sign(0) = +1`, and an exactly zero
/// final diagonal sets `singular`.
pub fn dense_negative_index(a: &DenseSym) -> DenseInertia {
    let n = a.n;
    let mut u: Vec<Vec<f64>> = (0..n).map(|i| a.data[i * n..(i + 1) * n].to_vec()).collect();
    let mut nu = 0;
    let mut singular = false;
    let mut interchanges = 0;
    for i in 0..n {
        let mut x = 0;
        for j in 0..i {
            let aij = u[i][j];
            if aij == 0.0 {
                continue;
            }
            let ajj = u[j][j];
            if ajj.abs() < aij.abs() {
                u.swap(i, j);
                interchanges += 1;
                x += 1;
                if (ajj >= 0.0) != (aij >= 0.0) {
                    x += 1;
                }
            }
            let factor = u[i][j] / u[j][j];
            if factor != 0.0 {
                let (upper, lower) = u.split_at_mut(i);
                let (pivot, row) = (&upper[j], &mut lower[0]);
                for c in j + 1..n {
                    row[c] -= factor * pivot[c];
                }
            }
            u[i][j] = 0.0;
        }
        let d = u[i][i];
        if d < 0.0 {
            x += 1;
        }
        if d == 0.0 {
            singular = true;
        }
        if x % 2 == 1 {
            nu += 1;
        }
    }
    DenseInertia { nu, singular, interchanges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(dense_negative_index(&DenseSym::from_diagonal(&[-3.0])).nu, 1);
        let swap = DenseSym::new(2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let r = dense_negative_index(&swap);
        assert_eq!((r.nu, r.interchanges, r.singular), (1, 1, true));
    }

    #[test]
    fn rejects_unsymmetric() {
        assert!(matches!(DenseSym::new(2, vec![1.0, 2.0, 3.0, 4.0]), Err(Error::NotSymmetric(_))));
        assert!(DenseSym::new(2, vec![1.0; 3]).is_err());
    }

    #[test]
    fn csr_conversions() {
        let d = DenseSym::new(2, vec![1.0, 0.0, 0.0, 2.0]).unwrap();
        assert_eq!(d.to_csr().nnz(), 4);
        assert_eq!(d.to_csr_sparse().nnz(), 2);
        assert_eq!(DenseSym::from_csr(&d.to_csr_sparse()).unwrap(), d);
    }
}
