use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::factor::{factorize, Variant};
use crate::sparse::CsrMatrix;
use crate::symbolic;

/// One factorization run, as emitted by the command-line tool.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub matrix: String,
    pub n: usize,
    pub nnz: usize,
    pub variant: Variant,
    pub ordering: String,
    pub nu: usize,
    pub singular_minor: bool,
    pub interchanges: usize,
    pub flops: u64,
    pub final_nnz: usize,
    pub max_row_nnz: usize,
    /// `final_nnz / nnz`.
    pub fill_ratio: f64,
    /// Total of the symbolic row counts used to size the factor.
    pub predicted_nnz: usize,
    pub wall_time_secs: f64,
}

/// Symbolic analysis plus one reduction of `a`, timed end to end.
pub fn run_report(a: &CsrMatrix, matrix: &str, ordering: &str, variant: Variant) -> Result<RunReport> {
    let start = Instant::now();
    let counts = symbolic::analyze(a);
    let caps = symbolic::allocate_capacities(a, &counts);
    let f = factorize(a, variant, &caps)?;
    let wall_time_secs = start.elapsed().as_secs_f64();
    let r = f.report;
    Ok(RunReport {
        matrix: matrix.to_string(),
        n: a.n(),
        nnz: a.nnz(),
        variant,
        ordering: ordering.to_string(),
        nu: r.nu,
        singular_minor: r.singular_minor,
        interchanges: r.interchanges,
        flops: r.flops,
        final_nnz: r.final_nnz,
        max_row_nnz: r.max_row_nnz,
        fill_ratio: if a.nnz() == 0 { 0.0 } else { r.final_nnz as f64 / a.nnz() as f64 },
        predicted_nnz: counts.total(),
        wall_time_secs,
    })
}

/// `index,value` rows with 1-based ordinals, after a header line.
pub fn eigenvalues_csv(first_ordinal: usize, values: &[f64]) -> String {
    let mut out = String::from("index,value\n");
    for (k, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{},{:?}", first_ordinal + k, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fill_ratio_definition() {
        let a = CsrMatrix::from_triplets(3, &[(0, 0, 1.0), (1, 0, 1.0), (1, 1, -1.0), (2, 2, 2.0)]).unwrap();
        let r = run_report(&a, "t", "natural", Variant::Givens).unwrap();
        assert_eq!(r.fill_ratio, r.final_nnz as f64 / 5.0);
        assert!(r.predicted_nnz >= r.final_nnz);
        assert_eq!(r.nu, 1);
    }

    #[test]
    fn csv_layout() {
        assert_eq!(eigenvalues_csv(2, &[0.5, 3.0]), "index,value\n2,0.5\n3,3.0\n");
    }
}
