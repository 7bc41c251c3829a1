use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::EcsrMatrix;
use crate::error::{Error, Result};

/// Ordered sparse accumulator for a single row.
///
/// Values live in a dense scratch array; the occupied column indices are kept
/// in a binary min-heap so the leftmost nonzero is always at hand. Entries
/// that cancel to exactly zero stay occupied.
#[derive(Debug, Clone)]
pub struct Ospa {
    values: Vec<f64>,
    occupied: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
    scratch: Vec<(usize, f64)>,
}

impl Ospa {
    pub fn new(n: usize) -> Self {
        Ospa {
            values: vec![0.0; n],
            occupied: vec![false; n],
            heap: BinaryHeap::new(),
            scratch: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn is_occupied(&self, c: usize) -> bool {
        self.occupied[c]
    }

    /// Value in column `c`, zero when unoccupied.
    pub fn value(&self, c: usize) -> f64 {
        self.values[c]
    }

    /// Loads row `i` of `m`. Builds the heap in linear time.
    pub fn load(&mut self, m: &EcsrMatrix, i: usize) -> Result<()> {
        if !self.is_empty() {
            return Err(Error::AccumulatorNotEmpty);
        }
        self.load_entries(m.row_cols(i), m.row_values(i));
        Ok(())
    }

    fn load_entries(&mut self, cols: &[usize], vals: &[f64]) {
        let mut buf = std::mem::take(&mut self.heap).into_vec();
        buf.clear();
        for (&c, &v) in cols.iter().zip(vals) {
            self.values[c] = v;
            self.occupied[c] = true;
            buf.push(Reverse(c));
        }
        self.heap = BinaryHeap::from(buf);
    }

    /// Discards all entries.
    pub fn clear(&mut self) {
        for Reverse(c) in self.heap.drain() {
            self.values[c] = 0.0;
            self.occupied[c] = false;
        }
    }

    /// Leftmost occupied column and its value, or `None` when empty.
    pub fn retrieve_head(&self) -> Option<(usize, f64)> {
        self.heap.peek().map(|&Reverse(c)| (c, self.values[c]))
    }

    pub fn remove_head(&mut self) -> Result<()> {
        let Reverse(c) = self.heap.pop().ok_or(Error::AccumulatorEmpty)?;
        self.occupied[c] = false;
        self.values[c] = 0.0;
        Ok(())
    }

    /// `self -= factor * row j`. New columns are heap-inserted. A zero factor
    /// leaves the accumulator untouched, pattern included. Returns the number
    /// of columns touched.
    pub fn subtract(&mut self, m: &EcsrMatrix, j: usize, factor: f64) -> usize {
        if factor == 0.0 {
            return 0;
        }
        let cols = m.row_cols(j);
        for (&c, &v) in cols.iter().zip(m.row_values(j)) {
            if !self.occupied[c] {
                self.occupied[c] = true;
                self.heap.push(Reverse(c));
            }
            self.values[c] -= factor * v;
        }
        cols.len()
    }

    /// Exchanges the accumulator's contents with row `j` of `m`.
    pub fn swap(&mut self, m: &mut EcsrMatrix, j: usize) -> Result<()> {
        m.ensure_fits(j, self.len())?;
        self.drain_sorted();
        self.load_entries(m.row_cols(j), m.row_values(j));
        let entries = std::mem::take(&mut self.scratch);
        let res = m.write_row(j, entries.len(), entries.iter().copied());
        self.scratch = entries;
        res
    }

    /// Writes the contents into row `i` of `m` in column order and empties
    /// the accumulator.
    pub fn store(&mut self, m: &mut EcsrMatrix, i: usize) -> Result<()> {
        m.ensure_fits(i, self.len())?;
        self.drain_sorted();
        let entries = std::mem::take(&mut self.scratch);
        let res = m.write_row(i, entries.len(), entries.iter().copied());
        self.scratch = entries;
        res
    }

    /// Moves every entry into `scratch`, sorted by column, leaving the
    /// accumulator empty.
    fn drain_sorted(&mut self) {
        self.scratch.clear();
        for Reverse(c) in self.heap.drain() {
            self.scratch.push((c, self.values[c]));
            self.values[c] = 0.0;
            self.occupied[c] = false;
        }
        self.scratch.sort_unstable_by_key(|e| e.0);
    }

    /// Occupied entries sorted by column.
    pub fn entries(&self) -> Vec<(usize, f64)> {
        let mut out: Vec<_> = self.heap.iter().map(|&Reverse(c)| (c, self.values[c])).collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Audits heap/occupied consistency and that unoccupied scratch is zero.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let mut seen = vec![false; self.occupied.len()];
        for &Reverse(c) in self.heap.iter() {
            if seen[c] {
                return Err(format!("column {c} appears twice in the heap"));
            }
            seen[c] = true;
        }
        for c in 0..self.occupied.len() {
            if seen[c] != self.occupied[c] {
                return Err(format!("occupied[{c}] disagrees with heap"));
            }
            if !self.occupied[c] && self.values[c] != 0.0 {
                return Err(format!("stale value in unoccupied column {c}"));
            }
        }
        let min = self.heap.iter().map(|r| r.0).min();
        if self.heap.peek().map(|r| r.0) != min {
            return Err("heap top is not the leftmost column".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::CsrMatrix;

    /// Builds an ECSR matrix whose rows are given explicitly; the CSR pattern
    /// is padded with the diagonal and mirrors, then each row is overwritten.
    fn ecsr_with_rows(n: usize, rows: &[Vec<(usize, f64)>], cap: usize) -> EcsrMatrix {
        let mut m = EcsrMatrix::build(&CsrMatrix::identity(n), &vec![cap; n]).unwrap();
        for (i, r) in rows.iter().enumerate() {
            m.write_row(i, r.len(), r.iter().copied()).unwrap();
        }
        m
    }

    #[test]
    fn load_and_retrieve() {
        let m = ecsr_with_rows(5, &[vec![(1, 2.0), (4, -1.0)], vec![]], 5);
        let mut s = Ospa::new(5);
        s.load(&m, 0).unwrap();
        assert_eq!(s.retrieve_head(), Some((1, 2.0)));
        s.remove_head().unwrap();
        s.remove_head().unwrap();
        s.load(&m, 1).unwrap();
        assert_eq!(s.retrieve_head(), None);
        assert!(matches!(s.remove_head(), Err(Error::AccumulatorEmpty)));
    }

    #[test]
    fn full_row_load_counts_every_column() {
        let row: Vec<_> = (0..6).map(|c| (c, c as f64)).collect();
        let m = ecsr_with_rows(6, &[row], 6);
        let mut s = Ospa::new(6);
        s.load(&m, 0).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s.load(&m, 0), Err(Error::AccumulatorNotEmpty));
    }

    #[test]
    fn head_follows_column_order() {
        let m = ecsr_with_rows(8, &[vec![(0, 3.0), (2, 1.0)], vec![(5, -1.0)]], 8);
        let mut s = Ospa::new(8);
        s.load(&m, 0).unwrap();
        assert_eq!(s.retrieve_head(), Some((0, 3.0)));
        s.remove_head().unwrap();
        assert_eq!(s.retrieve_head(), Some((2, 1.0)));
        s.remove_head().unwrap();
        assert!(s.is_empty());
        s.load(&m, 1).unwrap();
        assert_eq!(s.retrieve_head(), Some((5, -1.0)));
        s.check_consistency().unwrap();
    }

    #[test]
    fn subtract_keeps_cancelled_entries() {
        let m = ecsr_with_rows(3, &[vec![(1, 4.0)], vec![(1, 2.0)], vec![(0, 1.0), (2, 3.0)]], 3);
        let mut s = Ospa::new(3);
        s.load(&m, 0).unwrap();
        s.subtract(&m, 1, 2.0);
        assert_eq!(s.entries(), vec![(1, 0.0)]);
        assert!(s.is_occupied(1));

        let mut e = Ospa::new(3);
        e.subtract(&m, 2, -1.0);
        assert_eq!(e.entries(), vec![(0, 1.0), (2, 3.0)]);
        assert_eq!(e.subtract(&m, 1, 0.0), 0);
        assert_eq!(e.entries(), vec![(0, 1.0), (2, 3.0)]);
        e.check_consistency().unwrap();
    }

    #[test]
    fn swap_exchanges_and_is_an_involution() {
        let mut m = ecsr_with_rows(3, &[vec![(0, 1.0)], vec![(1, 2.0)], vec![]], 2);
        let mut s = Ospa::new(3);
        s.load(&m, 0).unwrap();
        s.swap(&mut m, 1).unwrap();
        assert_eq!(s.entries(), vec![(1, 2.0)]);
        assert_eq!(m.row_cols(1), &[0]);
        assert_eq!(m.row_values(1), &[1.0]);
        s.swap(&mut m, 1).unwrap();
        assert_eq!(s.entries(), vec![(0, 1.0)]);
        assert_eq!(m.row_cols(1), &[1]);

        let mut t = Ospa::new(3);
        t.swap(&mut m, 2).unwrap();
        assert!(t.is_empty());
        assert_eq!(m.row_len(2), 0);
        s.check_consistency().unwrap();
    }

    #[test]
    fn swap_and_store_detect_capacity_violation() {
        let mut m = ecsr_with_rows(3, &[vec![(0, 1.0), (1, 1.0), (2, 1.0)], vec![]], 3);
        let mut cap1 = EcsrMatrix::build(&CsrMatrix::identity(3), &[3, 1, 1]).unwrap();
        let mut s = Ospa::new(3);
        s.load(&m, 0).unwrap();
        assert!(matches!(s.swap(&mut cap1, 1), Err(Error::CapacityViolation { .. })));
        assert!(matches!(s.store(&mut cap1, 2), Err(Error::CapacityViolation { .. })));
        // accumulator is left intact after a rejected write
        assert_eq!(s.len(), 3);
        s.store(&mut m, 1).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn store_then_load_round_trips() {
        let mut m = ecsr_with_rows(6, &[vec![(1, -1.5), (3, 2.0), (5, 0.0)]], 6);
        let mut s = Ospa::new(6);
        s.load(&m, 0).unwrap();
        s.store(&mut m, 2).unwrap();
        assert!(s.is_empty());
        s.check_consistency().unwrap();
        assert_eq!(m.row_cols(2), &[1, 3, 5]);
        assert_eq!(m.row_values(2), &[-1.5, 2.0, 0.0]);
        s.store(&mut m, 3).unwrap();
        assert_eq!(m.row_len(3), 0);
    }
}
