use super::EcsrMatrix;
use crate::error::Result;

/// A sparse row held outside ECSR storage, sorted by column.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SparseRow {
    pub cols: Vec<usize>,
    pub vals: Vec<f64>,
}

impl SparseRow {
    pub fn from_ecsr(m: &EcsrMatrix, i: usize) -> Self {
        SparseRow {
            cols: m.row_cols(i).to_vec(),
            vals: m.row_values(i).to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn head(&self) -> Option<(usize, f64)> {
        self.cols.first().map(|&c| (c, self.vals[0]))
    }

    pub fn clear(&mut self) {
        self.cols.clear();
        self.vals.clear();
    }
}

/// Two-row sparse accumulator sharing one pattern. Slot 0 holds the pivot
/// row `j` and slot 1 the row being reduced.
#[derive(Debug, Clone)]
pub struct Spa2 {
    values: [Vec<f64>; 2],
    occupied: Vec<bool>,
    cols: Vec<usize>,
}

impl Spa2 {
    pub fn new(n: usize) -> Self {
        Spa2 {
            values: [vec![0.0; n], vec![0.0; n]],
            occupied: vec![false; n],
            cols: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Number of columns in the union pattern.
    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn value(&self, slot: usize, c: usize) -> f64 {
        self.values[slot][c]
    }

    /// Copies ECSR row `j` into slot 0 and `work` into slot 1, building the
    /// union pattern without duplicates.
    pub fn load_pair(&mut self, m: &EcsrMatrix, j: usize, work: &SparseRow) {
        debug_assert!(self.is_empty());
        for (&c, &v) in m.row_cols(j).iter().zip(m.row_values(j)) {
            self.values[0][c] = v;
            self.occupied[c] = true;
            self.cols.push(c);
        }
        for (&c, &v) in work.cols.iter().zip(&work.vals) {
            self.values[1][c] = v;
            if !self.occupied[c] {
                self.occupied[c] = true;
                self.cols.push(c);
            }
        }
    }

    /// Applies `[c s; -s c]` to every occupied column. Returns the number of
    /// columns touched.
    pub fn rotate(&mut self, c: f64, s: f64) -> usize {
        let [top, bottom] = &mut self.values;
        for &k in &self.cols {
            let (a, b) = (top[k], bottom[k]);
            top[k] = c * a + s * b;
            bottom[k] = -s * a + c * b;
        }
        self.cols.len()
    }

    /// Writes the rotated pair back and clears the accumulator. Row `j`
    /// receives every union column `>= j` from slot 0; `work` receives every
    /// union column `> j` from slot 1, exact zeros included.
    pub fn scatter(&mut self, m: &mut EcsrMatrix, j: usize, work: &mut SparseRow) -> Result<()> {
        self.cols.sort_unstable();
        let first = self.cols.partition_point(|&c| c < j);
        let pivot_len = self.cols.len() - first;
        if let Err(e) = m.ensure_fits(j, pivot_len) {
            self.clear();
            return Err(e);
        }
        let top = &self.values[0];
        m.write_row(j, pivot_len, self.cols[first..].iter().map(|&c| (c, top[c])))?;

        work.clear();
        let bottom = &self.values[1];
        for &c in self.cols[first..].iter().filter(|&&c| c > j) {
            work.cols.push(c);
            work.vals.push(bottom[c]);
        }
        self.clear();
        Ok(())
    }

    fn clear(&mut self) {
        for &c in &self.cols {
            self.values[0][c] = 0.0;
            self.values[1][c] = 0.0;
            self.occupied[c] = false;
        }
        self.cols.clear();
    }

    pub fn check_cleared(&self) -> bool {
        self.cols.is_empty()
            && self.occupied.iter().all(|&o| !o)
            && self.values.iter().all(|v| v.iter().all(|&x| x == 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::CsrMatrix;

    fn ecsr(n: usize, rows: &[(usize, Vec<(usize, f64)>)]) -> EcsrMatrix {
        let mut m = EcsrMatrix::build(&CsrMatrix::identity(n), &vec![n; n]).unwrap();
        for (i, r) in rows {
            m.write_row(*i, r.len(), r.iter().copied()).unwrap();
        }
        m
    }

    fn row(entries: &[(usize, f64)]) -> SparseRow {
        SparseRow {
            cols: entries.iter().map(|e| e.0).collect(),
            vals: entries.iter().map(|e| e.1).collect(),
        }
    }

    #[test]
    fn three_four_five_rotation() {
        let mut m = ecsr(2, &[(0, vec![(0, 3.0)])]);
        let mut w = row(&[(0, 4.0)]);
        let mut spa = Spa2::new(2);
        spa.load_pair(&m, 0, &w);
        spa.rotate(0.6, 0.8);
        spa.scatter(&mut m, 0, &mut w).unwrap();
        assert_eq!(m.row_cols(0), &[0]);
        assert!((m.row_values(0)[0] - 5.0).abs() < 1e-15);
        assert!(w.is_empty());
        assert!(spa.check_cleared());
    }

    #[test]
    fn disjoint_patterns_union() {
        let mut m = ecsr(6, &[(0, vec![(0, 1.0), (2, 1.0)])]);
        let mut w = row(&[(0, 1.0), (5, 1.0)]);
        let mut spa = Spa2::new(6);
        spa.load_pair(&m, 0, &w);
        assert_eq!(spa.len(), 3);
        let r = 2f64.sqrt();
        spa.rotate(1.0 / r, 1.0 / r);
        spa.scatter(&mut m, 0, &mut w).unwrap();
        assert_eq!(m.row_cols(0), &[0, 2, 5]);
        assert_eq!(w.cols, vec![2, 5]);
        assert!(spa.check_cleared());
    }

    #[test]
    fn identity_rotation_keeps_values() {
        let mut m = ecsr(4, &[(1, vec![(1, 2.0), (3, -1.0)])]);
        let mut w = row(&[(1, 0.0), (2, 7.0)]);
        let mut spa = Spa2::new(4);
        spa.load_pair(&m, 1, &w);
        spa.rotate(1.0, 0.0);
        spa.scatter(&mut m, 1, &mut w).unwrap();
        assert_eq!(m.row_cols(1), &[1, 2, 3]);
        assert_eq!(m.row_values(1), &[2.0, 0.0, -1.0]);
        assert_eq!(w, row(&[(2, 7.0), (3, 0.0)]));
    }

    #[test]
    fn scatter_capacity_violation_clears_state() {
        let mut m = EcsrMatrix::build(&CsrMatrix::identity(3), &[1, 1, 1]).unwrap();
        let mut w = row(&[(0, 1.0), (1, 1.0), (2, 1.0)]);
        let mut spa = Spa2::new(3);
        spa.load_pair(&m, 0, &w);
        spa.rotate(1.0, 0.0);
        assert!(spa.scatter(&mut m, 0, &mut w).is_err());
        assert!(spa.check_cleared());
    }
}
