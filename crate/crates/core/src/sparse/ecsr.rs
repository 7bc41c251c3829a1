use super::CsrMatrix;
use crate::error::{Error, Result};

/// Expandable compressed sparse row storage.
///
/// Rows are laid out one after another in `val`/`col`. Row `i` occupies
/// `head[i]..tail[i]`; the slots `tail[i]..head[i + 1]` are its vacant space.
/// Capacities are fixed at construction, so a row can grow only up to the
/// space reserved for it.
#[derive(Debug, Clone)]
pub struct EcsrMatrix {
    n: usize,
    val: Vec<f64>,
    col: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
    peak_row_len: usize,
}

impl EcsrMatrix {
    /// Copies `a` into fresh storage. Each row gets
    /// `max(row_capacity[i], nnz(a row i))` slots.
    pub fn build(a: &CsrMatrix, row_capacity: &[usize]) -> Result<Self> {
        let n = a.n();
        assert_eq!(row_capacity.len(), n, "one capacity per row");
        let mut head = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        head.push(0);
        for (i, &cap) in row_capacity.iter().enumerate() {
            total = total
                .checked_add(cap.max(a.row_nnz(i)))
                .ok_or(Error::CapacityOverflow)?;
            head.push(total);
        }
        let mut val = vec![0.0; total];
        let mut col = vec![0usize; total];
        let mut tail = Vec::with_capacity(n);
        let mut peak_row_len = 0;
        for i in 0..n {
            let len = a.row_nnz(i);
            let h = head[i];
            col[h..h + len].copy_from_slice(a.row_cols(i));
            val[h..h + len].copy_from_slice(a.row_values(i));
            tail.push(h + len);
            peak_row_len = peak_row_len.max(len);
        }
        Ok(EcsrMatrix { n, val, col, head, tail, peak_row_len })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn head(&self) -> &[usize] {
        &self.head
    }

    pub fn tail(&self) -> &[usize] {
        &self.tail
    }

    pub fn capacity(&self, i: usize) -> usize {
        self.head[i + 1] - self.head[i]
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.tail[i] - self.head[i]
    }

    pub fn vacancy(&self, i: usize) -> usize {
        self.head[i + 1] - self.tail[i]
    }

    pub fn row_cols(&self, i: usize) -> &[usize] {
        &self.col[self.head[i]..self.tail[i]]
    }

    pub fn row_values(&self, i: usize) -> &[f64] {
        &self.val[self.head[i]..self.tail[i]]
    }

    /// Value of the leading entry of row `i` if that entry sits in column `i`.
    /// Rows of the reduced matrix are upper trapezoidal, so this is the
    /// current pivot, or zero when the diagonal slot is vacant.
    pub fn leading_diagonal(&self, i: usize) -> f64 {
        let (h, t) = (self.head[i], self.tail[i]);
        if h < t && self.col[h] == i {
            self.val[h]
        } else {
            0.0
        }
    }

    pub fn get(&self, i: usize, c: usize) -> f64 {
        match self.row_cols(i).binary_search(&c) {
            Ok(k) => self.row_values(i)[k],
            Err(_) => 0.0,
        }
    }

    /// Total occupied entries over all rows.
    pub fn nnz(&self) -> usize {
        (0..self.n).map(|i| self.row_len(i)).sum()
    }

    pub fn total_capacity(&self) -> usize {
        self.head[self.n]
    }

    /// Largest row occupancy observed at any point since construction.
    pub fn peak_row_len(&self) -> usize {
        self.peak_row_len
    }

    pub(crate) fn ensure_fits(&self, i: usize, needed: usize) -> Result<()> {
        let capacity = self.capacity(i);
        if needed > capacity {
            return Err(Error::CapacityViolation { row: i, needed, capacity });
        }
        Ok(())
    }

    /// Replaces row `i` with `entries`, which must be sorted by column.
    pub(crate) fn write_row<I>(&mut self, i: usize, len: usize, entries: I) -> Result<()>
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        self.ensure_fits(i, len)?;
        let h = self.head[i];
        let mut p = h;
        for (c, v) in entries {
            self.col[p] = c;
            self.val[p] = v;
            p += 1;
        }
        debug_assert_eq!(p - h, len);
        self.tail[i] = p;
        self.peak_row_len = self.peak_row_len.max(len);
        Ok(())
    }

    /// Checks `head[i] <= tail[i] <= head[i+1]` and sorted columns in every row.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for i in 0..self.n {
            if !(self.head[i] <= self.tail[i] && self.tail[i] <= self.head[i + 1]) {
                return Err(format!("row {i} overflows its allocation"));
            }
            let cols = self.row_cols(i);
            if cols.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("row {i} columns are not strictly increasing"));
            }
            if cols.iter().any(|&c| c >= self.n) {
                return Err(format!("row {i} has a column out of range"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense2() -> CsrMatrix {
        CsrMatrix::from_triplets(2, &[(0, 0, 1.0), (0, 1, 2.0), (1, 1, 3.0)]).unwrap()
    }

    #[test]
    fn dense_exact_capacity() {
        let e = EcsrMatrix::build(&dense2(), &[2, 2]).unwrap();
        assert_eq!(e.head(), &[0, 2, 4]);
        assert_eq!(e.tail(), &[2, 4]);
        assert_eq!(e.row_values(1), &[2.0, 3.0]);
    }

    #[test]
    fn identity_vacancies() {
        let e = EcsrMatrix::build(&CsrMatrix::identity(3), &[3, 2, 1]).unwrap();
        let vac: Vec<_> = (0..3).map(|i| e.vacancy(i)).collect();
        assert_eq!(vac, vec![2, 1, 0]);
        e.check_invariants().unwrap();
    }

    #[test]
    fn small_capacities_are_raised() {
        let e = EcsrMatrix::build(&dense2(), &[0, 1]).unwrap();
        assert_eq!(e.capacity(0), 2);
        assert_eq!(e.capacity(1), 2);
    }

    #[test]
    fn capacity_overflow_is_reported() {
        let a = CsrMatrix::identity(2);
        assert_eq!(
            EcsrMatrix::build(&a, &[usize::MAX, 1]).unwrap_err(),
            Error::CapacityOverflow
        );
    }

    #[test]
    fn write_row_respects_capacity() {
        let mut e = EcsrMatrix::build(&CsrMatrix::identity(2), &[1, 1]).unwrap();
        let err = e.write_row(0, 2, [(0, 1.0), (1, 1.0)]).unwrap_err();
        assert_eq!(err, Error::CapacityViolation { row: 0, needed: 2, capacity: 1 });
    }
}
