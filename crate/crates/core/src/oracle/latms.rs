//! Random symmetric test matrices `A = QΛQᵀ` with a planted spectrum, after
//! the six eigenvalue distributions of LAPACK's LATMS.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)` and is drawn in a
//! fixed order: mode-5 exponents (`n` uniforms), then the eigenvalue signs
//! (`n` booleans, modes 1-5) or the eigenvalues themselves (`n` standard
//! normals, mode 6), then `n²` standard normals, row-major, for `Q`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::DenseSym;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatmsSpec {
    pub n: usize,
    pub mode: u8,
    pub kappa: f64,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct LatmsMatrix {
    pub matrix: DenseSym,
    /// Planted eigenvalues, in generation order.
    pub eigenvalues: Vec<f64>,
}

impl LatmsMatrix {
    pub fn sorted_eigenvalues(&self) -> Vec<f64> {
        let mut ev = self.eigenvalues.clone();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

/// Singular value profile for modes 1-5.
pub fn latms_sigma<R: Rng>(n: usize, mode: u8, kappa: f64, rng: &mut R) -> Vec<f64> {
    let inv = 1.0 / kappa;
    let frac = |i: usize| if n > 1 { i as f64 / (n - 1) as f64 } else { 0.0 };
    match mode {
        1 => (0..n).map(|i| if i == 0 { 1.0 } else { inv }).collect(),
        2 => (0..n).map(|i| if i + 1 < n { 1.0 } else { inv }).collect(),
        3 => (0..n).map(|i| inv.powf(frac(i))).collect(),
        4 => (0..n).map(|i| 1.0 - frac(i) * (1.0 - inv)).collect(),
        5 => (0..n).map(|_| inv.powf(rng.gen::<f64>())).collect(),
        _ => unreachable!("mode validated by caller"),
    }
}

pub fn latms_generate(spec: &LatmsSpec) -> Result<LatmsMatrix> {
    if !(1..=6).contains(&spec.mode) {
        return Err(Error::InvalidParameter(format!("mode must be 1..6, got {}", spec.mode)));
    }
    if !(spec.kappa >= 1.0) || !spec.kappa.is_finite() {
        return Err(Error::InvalidParameter(format!("kappa must be >= 1, got {}", spec.kappa)));
    }
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let eigenvalues: Vec<f64> = if spec.mode == 6 {
        (0..n).map(|_| rng.sample(StandardNormal)).collect()
    } else {
        let sigma = latms_sigma(n, spec.mode, spec.kappa, &mut rng);
        sigma
            .into_iter()
            .map(|s| if rng.gen::<bool>() { s } else { -s })
            .collect()
    };
    let q = random_orthogonal(n, &mut rng);
    Ok(LatmsMatrix { matrix: similarity(n, &q, &eigenvalues), eigenvalues })
}

/// `(QΛQᵀ + (QΛQᵀ)ᵀ) / 2` for row-major `q`.
pub fn similarity(n: usize, q: &[f64], lambda: &[f64]) -> DenseSym {
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for k in 0..n {
                s += q[i * n + k] * lambda[k] * q[j * n + k];
            }
            m[i * n + j] = s;
        }
    }
    DenseSym::symmetrize(n, &m)
}

/// Random orthogonal matrix (row-major): Householder QR of an `n × n`
/// standard Gaussian sample, columns signed so that `R` has a positive
/// diagonal.
pub fn random_orthogonal<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut g: Vec<f64> = (0..n * n).map(|_| rng.sample(StandardNormal)).collect();
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut r_sign = vec![1.0; n];
    for k in 0..n {
        let norm = (k..n).map(|i| g[i * n + k].powi(2)).sum::<f64>().sqrt();
        let x0 = g[k * n + k];
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..n).map(|i| g[i * n + k]).collect();
        v[0] -= alpha;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            // column already reduced
            r_sign[k] = if x0 < 0.0 { -1.0 } else { 1.0 };
            reflectors.push(Vec::new());
            continue;
        }
        v.iter_mut().for_each(|x| *x /= vnorm);
        for j in k..n {
            let dot: f64 = (k..n).map(|i| v[i - k] * g[i * n + j]).sum();
            for i in k..n {
                g[i * n + j] -= 2.0 * v[i - k] * dot;
            }
        }
        r_sign[k] = if alpha < 0.0 { -1.0 } else { 1.0 };
        reflectors.push(v);
    }
    // Q = H_0 H_1 ... H_{n-1}, accumulated right to left onto the identity.
    let mut q = vec![0.0; n * n];
    for i in 0..n {
        q[i * n + i] = 1.0;
    }
    for (k, v) in reflectors.iter().enumerate().rev() {
        if v.is_empty() {
            continue;
        }
        for j in 0..n {
            let dot: f64 = (k..n).map(|i| v[i - k] * q[i * n + j]).sum();
            for i in k..n {
                q[i * n + j] -= 2.0 * v[i - k] * dot;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            q[i * n + j] *= r_sign[j];
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(n: usize, mode: u8, kappa: f64) -> Vec<f64> {
        latms_sigma(n, mode, kappa, &mut ChaCha8Rng::seed_from_u64(0))
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-15)
    }

    #[test]
    fn deterministic_profiles() {
        assert!(close(&sigma(3, 3, 100.0), &[1.0, 0.1, 0.01]));
        assert!(close(&sigma(3, 4, 2.0), &[1.0, 0.75, 0.5]));
        assert!(close(&sigma(4, 2, 10.0), &[1.0, 1.0, 1.0, 0.1]));
        assert!(close(&sigma(3, 1, 10.0), &[1.0, 0.1, 0.1]));
    }

    #[test]
    fn random_profile_is_bounded() {
        let s = sigma(200, 5, 1e4);
        assert!(s.iter().all(|&v| v > 1e-4 && v < 1.0));
    }

    #[test]
    fn q_is_orthogonal() {
        let n = 20;
        let q = random_orthogonal(n, &mut ChaCha8Rng::seed_from_u64(3));
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|k| q[k * n + i] * q[k * n + j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn invalid_specs() {
        let base = LatmsSpec { n: 4, mode: 3, kappa: 10.0, seed: 1 };
        assert!(latms_generate(&LatmsSpec { mode: 0, ..base }).is_err());
        assert!(latms_generate(&LatmsSpec { mode: 7, ..base }).is_err());
        assert!(latms_generate(&LatmsSpec { kappa: 0.5, ..base }).is_err());
        assert!(latms_generate(&base).is_ok());
    }

    #[test]
    fn seeds_are_reproducible() {
        let spec = LatmsSpec { n: 6, mode: 6, kappa: 1.0, seed: 42 };
        let a = latms_generate(&spec).unwrap();
        let b = latms_generate(&spec).unwrap();
        assert_eq!(a.matrix, b.matrix);
        assert_eq!(a.eigenvalues, b.eigenvalues);
    }
}
