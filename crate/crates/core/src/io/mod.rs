//! Matrix Market files, permutation files and run reports.

mod mtx;
mod perm;
mod report;

pub use mtx::{parse_matrix_market, read_matrix_market, write_matrix_market};
pub use perm::{apply_ordering, Permutation};
pub use report::{eigenvalues_csv, run_report, RunReport};
