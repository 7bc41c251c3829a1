//! A well-conditioned matrix whose leading principal minors are almost all
//! nearly singular:
//!
//! ```text
//! A = [ X  Zᵀ ]     X = Q diag(1, ε_1, ..., ε_{m-1}) Qᵀ,  ε_i ~ N(0, eps²)
//!     [ Z  0  ]     Z ~ N(0, 1),  m = n / 2
//! ```
//!
//! `A` has exactly `n/2` negative eigenvalues, yet the computed determinant
//! signs of its leading minors are unreliable, so the factorization's count
//! can be off.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::jacobi::{jacobi_eigenvalues, negative_count, DEFAULT_TOL};
use super::latms::{random_orthogonal, similarity};
use super::DenseSym;
use crate::error::{Error, Result};
use crate::factor::{negative_index, Variant};
use crate::symbolic;

pub fn instability_example(n: usize, seed: u64) -> Result<DenseSym> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("order must be even and positive, got {n}")));
    }
    let m = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = random_orthogonal(m, &mut rng);
    let d: Vec<f64> = (0..m)
        .map(|i| {
            if i == 0 {
                1.0
            } else {
                f64::EPSILON * rng.sample::<f64, _>(StandardNormal)
            }
        })
        .collect();
    let x = similarity(m, &q, &d);
    let z: Vec<f64> = (0..m * m).map(|_| rng.sample(StandardNormal)).collect();
    Ok(DenseSym::from_lower(n, |i, j| match (i < m, j < m) {
        (true, true) => x.get(i, j),
        (false, true) => z[(i - m) * m + j],
        (false, false) => 0.0,
        (true, false) => unreachable!("lower triangle only"),
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct InstabilityReport {
    pub n: usize,
    pub seed: u64,
    /// `max|λ| / min|λ|` from the Jacobi eigenvalues.
    pub kappa: f64,
    pub jacobi_nu: usize,
    pub elementary_nu: usize,
    pub givens_nu: usize,
    pub elementary_singular: bool,
    pub givens_singular: bool,
    /// Either variant disagrees with the Jacobi count.
    pub discrepancy: bool,
}

pub fn instability_report(n: usize, seed: u64) -> Result<InstabilityReport> {
    let a = instability_example(n, seed)?;
    let ev = jacobi_eigenvalues(&a, DEFAULT_TOL)?;
    let abs_max = ev.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let abs_min = ev.iter().map(|v| v.abs()).fold(f64::INFINITY, f64::min);
    let jacobi_nu = negative_count(&ev);

    let csr = a.to_csr_sparse();
    let counts = symbolic::analyze(&csr);
    let el = negative_index(&csr, Variant::Elementary, &counts)?;
    let gv = negative_index(&csr, Variant::Givens, &counts)?;
    Ok(InstabilityReport {
        n,
        seed,
        kappa: abs_max / abs_min,
        jacobi_nu,
        elementary_nu: el.nu,
        givens_nu: gv.nu,
        elementary_singular: el.singular_minor,
        givens_singular: gv.singular_minor,
        discrepancy: el.nu != jacobi_nu || gv.nu != jacobi_nu,
    })
}
