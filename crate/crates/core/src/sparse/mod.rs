//! Sparse storage used by the factorization: immutable CSR input, row-expandable
//! ECSR working storage, and the one- and two-row sparse accumulators.

mod csr;
mod ecsr;
mod ospa;
mod spa2;

pub use csr::CsrMatrix;
pub use ecsr::EcsrMatrix;
pub use ospa::Ospa;
pub use spa2::{SparseRow, Spa2};
