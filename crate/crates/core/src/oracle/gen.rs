//! Seeded test matrices. All generators use `ChaCha8Rng::seed_from_u64`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::DenseSym;
use crate::sparse::CsrMatrix;

/// Symmetric matrix with independent standard normal entries in the lower
/// triangle, drawn row by row.
pub fn random_gaussian_symmetric(n: usize, seed: u64) -> DenseSym {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DenseSym::from_lower(n, |_, _| rng.sample(StandardNormal))
}

/// Symmetric integer matrix (row-major) with entries uniform in `lo..=hi`.
pub fn random_integer_symmetric(n: usize, lo: i64, hi: i64, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let v = rng.gen_range(lo..=hi);
            e[i * n + j] = v;
            e[j * n + i] = v;
        }
    }
    e
}

/// Sparse symmetric matrix: each strictly lower position is present with
/// probability `density`; values and the diagonal are standard normal.
pub fn random_sparse_symmetric(n: usize, density: f64, seed: u64) -> CsrMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if rng.gen::<f64>() < density {
                t.push((i, j, rng.sample(StandardNormal)));
            }
        }
        t.push((i, i, rng.sample(StandardNormal)));
    }
    CsrMatrix::from_triplets(n, &t).expect("generated entries are valid")
}

/// 5-point Laplacian on an `m × m` grid, minus `shift·I`.
pub fn grid_laplacian(m: usize, shift: f64) -> CsrMatrix {
    let n = m * m;
    let mut t = Vec::with_capacity(3 * n);
    for r in 0..m {
        for c in 0..m {
            let i = r * m + c;
            t.push((i, i, 4.0 - shift));
            if c > 0 {
                t.push((i, i - 1, -1.0));
            }
            if r > 0 {
                t.push((i, i - m, -1.0));
            }
        }
    }
    CsrMatrix::from_triplets(n, &t).expect("grid entries are valid")
}

/// Symmetric tridiagonal Toeplitz matrix with `diag` on the diagonal and `off`
/// beside it.
pub fn tridiagonal(n: usize, diag: f64, off: f64) -> CsrMatrix {
    let mut t = Vec::with_capacity(2 * n);
    for i in 0..n {
        t.push((i, i, diag));
        if i > 0 {
            t.push((i, i - 1, off));
        }
    }
    CsrMatrix::from_triplets(n, &t).expect("tridiagonal entries are valid")
}

/// Closed-form spectrum of [`tridiagonal`], ascending.
pub fn tridiagonal_eigenvalues(n: usize, diag: f64, off: f64) -> Vec<f64> {
    let mut ev: Vec<f64> = (1..=n)
        .map(|k| diag + 2.0 * off * (k as f64 * std::f64::consts::PI / (n + 1) as f64).cos())
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn diagonal(d: &[f64]) -> CsrMatrix {
    let t: Vec<_> = d.iter().enumerate().map(|(i, &v)| (i, i, v)).collect();
    CsrMatrix::from_triplets(d.len(), &t).expect("diagonal entries are valid")
}

/// A random symmetric permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    p
}
