use crate::error::{Error, Result};
use crate::factor::Sign;

pub const MAX_ORDER: usize = 16;

/// Exact leading principal minors `det(A_1), ..., det(A_n)` of an integer
/// symmetric matrix (row-major), by fraction-free elimination.
pub fn exact_leading_minors(n: usize, entries: &[i64]) -> Result<Vec<i128>> {
    if n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("order {n} exceeds {MAX_ORDER}")));
    }
    if entries.len() != n * n {
        return Err(Error::InvalidParameter(format!("expected {} entries", n * n)));
    }
    for i in 0..n {
        for j in 0..i {
            if entries[i * n + j] != entries[j * n + i] {
                return Err(Error::NotSymmetric(format!("entry ({i}, {j}) differs from its mirror")));
            }
        }
    }
    (1..=n)
        .map(|k| {
            let m: Vec<Vec<i128>> = (0..k)
                .map(|i| (0..k).map(|j| entries[i * n + j] as i128).collect())
                .collect();
            bareiss_det(m)
        })
        .collect()
}

pub fn exact_det_signs(n: usize, entries: &[i64]) -> Result<Vec<Sign>> {
    Ok(exact_leading_minors(n, entries)?
        .into_iter()
        .map(|d| match d.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        })
        .collect())
}

/// Determinant by Bareiss elimination with row pivoting. Every division is exact.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let k = m.len();
    let mut negate = false;
    let mut prev: i128 = 1;
    for p in 0..k.saturating_sub(1) {
        if m[p][p] == 0 {
            match (p + 1..k).find(|&r| m[r][p] != 0) {
                Some(r) => {
                    m.swap(p, r);
                    negate = !negate;
                }
                None => return Ok(0),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let a = m[i][j].checked_mul(m[p][p]).ok_or(Error::IntegerOverflow)?;
                let b = m[i][p].checked_mul(m[p][j]).ok_or(Error::IntegerOverflow)?;
                m[i][j] = a.checked_sub(b).ok_or(Error::IntegerOverflow)? / prev;
            }
        }
        prev = m[p][p];
    }
    let det = m.last().map_or(1, |r| r[k - 1]);
    Ok(if negate { -det } else { det })
}
