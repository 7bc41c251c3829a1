use super::DenseSym;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of `a`, ascending, by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm is at most
/// `tol * ‖A‖_F`.
pub fn jacobi_eigenvalues(a: &DenseSym, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = a.n();
    let mut m: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j)).collect()).collect();
    let target = tol * a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= target {
            let mut d: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
            d.sort_by(f64::total_cmp);
            return Ok(d);
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, p, q);
            }
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

fn off_diagonal_norm(m: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                s += v * v;
            }
        }
    }
    s.sqrt()
}

/// Annihilates `m[p][q]` with the rotation `M <- JᵀMJ`.
fn rotate(m: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = m[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let n = m.len();
    for row in m.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = c * kp - s * kq;
        row[q] = s * kp + c * kq;
    }
    for k in 0..n {
        let (pk, qk) = (m[p][k], m[q][k]);
        m[p][k] = c * pk - s * qk;
        m[q][k] = s * pk + c * qk;
    }
    m[p][q] = 0.0;
    m[q][p] = 0.0;
}

/// Number of strictly negative values in a spectrum.
pub fn negative_count(eigenvalues: &[f64]) -> usize {
    eigenvalues.iter().filter(|&&v| v < 0.0).count()
}
