//! Inertia of sparse symmetric matrices.
//!
//! The number of negative eigenvalues `ν(A)` equals the number of sign changes
//! in `1, det(A_1), ..., det(A_n)`, where `A_k` are the leading principal
//! submatrices. This crate obtains those signs by reducing `A` to upper
//! triangular form row by row, either with pairwise pivoting or with Givens
//! rotations, on a row-expandable sparse layout whose rows are presized from
//! the structure of the QR factor of `A`.
//!
//! On top of `ν(A - xI)` sits a bisection eigensolver that computes all
//! eigenvalues, the eigenvalues in an interval, or eigenvalues by ordinal.
//!
//! ```
//! use inertia::{CsrMatrix, Variant, symbolic, factor};
//!
//! let a = CsrMatrix::from_triplets(3, &[(0, 0, 2.0), (1, 0, -1.0), (1, 1, -3.0), (2, 2, 1.0)])?;
//! let report = factor::negative_index(&a, Variant::Elementary, &symbolic::analyze(&a))?;
//! assert_eq!(report.nu, 1);
//! # Ok::<(), inertia::Error>(())
//! ```

pub mod cli;
pub mod eig;
pub mod error;
pub mod factor;
pub mod io;
pub mod oracle;
pub mod sparse;
pub mod symbolic;

pub use eig::{BisectionParams, EigResult};
pub use error::{Error, Result};
pub use factor::{InertiaReport, Sign, Variant};
pub use io::Permutation;
pub use sparse::{CsrMatrix, EcsrMatrix};
