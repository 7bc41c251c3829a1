//! Dense reference implementations and seeded test-matrix generators used to
//! check the sparse code.

mod bareiss;
mod dense;
pub mod gen;
mod instability;
mod jacobi;
mod latms;

pub use bareiss::{exact_det_signs, exact_leading_minors};
pub use dense::{dense_negative_index, DenseInertia, DenseSym};
pub use instability::{instability_example, instability_report, InstabilityReport};
pub use jacobi::{jacobi_eigenvalues, negative_count, DEFAULT_TOL as JACOBI_TOL};
pub use latms::{latms_generate, latms_sigma, random_orthogonal, LatmsMatrix, LatmsSpec};
