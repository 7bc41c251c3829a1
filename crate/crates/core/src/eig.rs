//! Bisection eigensolver driven by `f(x) = ν(A - xI)`, the number of
//! eigenvalues strictly left of `x`.
//!
//! A bracket `[x0, x1)` with known counts `ν0 = f(x0)`, `ν1 = f(x1)` holds
//! `ν1 - ν0` eigenvalues. Brackets are halved until their width drops to
//! `2τ‖A‖₁`; each surviving bracket reports its midpoint once per eigenvalue.
//! The recursion runs on an explicit stack, left half first, so values come
//! out in ascending order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{ShiftedInertia, Variant};
use crate::sparse::CsrMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectionParams {
    /// Relative tolerance; brackets stop at width `2 * tau * ‖A‖₁`.
    pub tau: f64,
    pub variant: Variant,
    /// Extra shifted evaluations tried when a split point hits a singular
    /// leading minor.
    pub max_singular_retries: usize,
    /// Relative size of those shifts, in units of `‖A‖₁`.
    pub nudge: f64,
}

impl Default for BisectionParams {
    fn default() -> Self {
        BisectionParams {
            tau: f64::EPSILON,
            variant: Variant::Elementary,
            max_singular_retries: 3,
            nudge: 2f64.powi(-40),
        }
    }
}

impl BisectionParams {
    pub fn with_tau(tau: f64) -> Self {
        BisectionParams { tau, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tau > 0.0 && self.tau < 1.0) {
            return Err(Error::InvalidParameter(format!("tau must lie in (0, 1), got {}", self.tau)));
        }
        if !(self.nudge > 0.0 && self.nudge < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "nudge must lie in (0, 1), got {}",
                self.nudge
            )));
        }
        Ok(())
    }
}

/// One interior node of the bisection tree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitRecord {
    pub x0: f64,
    pub nu0: usize,
    pub x1: f64,
    pub nu1: usize,
    /// Where the bracket was actually split (the midpoint unless nudged).
    pub x: f64,
    pub mu: usize,
    /// `ν(A - xI)` fell outside `[nu0, nu1]` and was clamped.
    pub clamped: bool,
}

/// A converged bracket and the ordinals it reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub x0: f64,
    pub x1: f64,
    pub value: f64,
    /// 1-based ordinal of the first eigenvalue reported from this bracket.
    pub first_ordinal: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigResult {
    /// Computed eigenvalues, ascending, repeated per multiplicity.
    pub values: Vec<f64>,
    pub inertia_evals: usize,
    /// Extra evaluations spent moving split points off singular minors.
    pub singular_retries: usize,
    /// Evaluations whose singular flag persisted after all retries.
    pub unresolved_singular: usize,
    pub splits: Vec<SplitRecord>,
    pub brackets: Vec<Bracket>,
    pub norm: f64,
}

impl EigResult {
    /// Whether any evaluation ended on a singular leading minor.
    pub fn has_warning(&self) -> bool {
        self.unresolved_singular > 0
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    x0: f64,
    nu0: usize,
    x1: f64,
    nu1: usize,
}

struct Bisector<'a> {
    eval: ShiftedInertia<'a>,
    params: BisectionParams,
    norm: f64,
    retries: usize,
    unresolved: usize,
    splits: Vec<SplitRecord>,
}

impl<'a> Bisector<'a> {
    fn new(a: &'a CsrMatrix, params: BisectionParams) -> Result<Self> {
        params.validate()?;
        if a.n() == 0 {
            return Err(Error::InvalidParameter("matrix has dimension 0".into()));
        }
        let norm = a.one_norm();
        if !norm.is_finite() {
            return Err(Error::NonFiniteNorm);
        }
        Ok(Bisector {
            eval: ShiftedInertia::new(a, params.variant),
            params,
            norm,
            retries: 0,
            unresolved: 0,
            splits: Vec::new(),
        })
    }

    fn root(&self) -> Node {
        Node { x0: -self.norm, nu0: 0, x1: self.norm, nu1: self.eval.matrix().n() }
    }

    /// `ν` at a fixed point; no nudging since the caller fixed the point.
    fn count_at(&mut self, x: f64) -> Result<usize> {
        let r = self.eval.eval(x)?;
        if r.singular_minor {
            self.unresolved += 1;
        }
        Ok(r.nu)
    }

    /// Splits `node` near its midpoint. On a singular minor the split point
    /// moves by growing multiples of `nudge·‖A‖₁`, alternating sides, but
    /// never leaves the middle half of the bracket.
    fn split(&mut self, node: Node, mid: f64) -> Result<SplitRecord> {
        let mut x = mid;
        let mut rep = self.eval.eval(x)?;
        let limit = 0.25 * (node.x1 - node.x0);
        let mut attempt = 0;
        while rep.singular_minor && attempt < self.params.max_singular_retries {
            attempt += 1;
            let step = (self.params.nudge * self.norm * attempt.div_ceil(2) as f64).min(limit);
            let candidate = if attempt % 2 == 1 { mid + step } else { mid - step };
            if candidate <= node.x0 || candidate >= node.x1 || candidate == x {
                continue;
            }
            self.retries += 1;
            x = candidate;
            rep = self.eval.eval(x)?;
        }
        if rep.singular_minor {
            self.unresolved += 1;
        }
        let mu = rep.nu.clamp(node.nu0, node.nu1);
        let record = SplitRecord {
            x0: node.x0,
            nu0: node.nu0,
            x1: node.x1,
            nu1: node.nu1,
            x,
            mu,
            clamped: mu != rep.nu,
        };
        self.splits.push(record);
        Ok(record)
    }

    /// Runs the recursion below `root`, keeping only ordinals in `wanted`
    /// (1-based, inclusive).
    fn run(mut self, root: Node, wanted: Option<(usize, usize)>) -> Result<EigResult> {
        let threshold = 2.0 * self.params.tau * self.norm;
        let mut values = Vec::new();
        let mut brackets = Vec::new();
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            if node.nu1 <= node.nu0 {
                continue;
            }
            let (lo, hi) = wanted.unwrap_or((node.nu0 + 1, node.nu1));
            let (first, last) = (lo.max(node.nu0 + 1), hi.min(node.nu1));
            if first > last {
                continue;
            }
            let mid = node.x0 + 0.5 * (node.x1 - node.x0);
            let splittable = node.x1 - node.x0 > threshold && mid > node.x0 && mid < node.x1;
            if splittable {
                let s = self.split(node, mid)?;
                stack.push(Node { x0: s.x, nu0: s.mu, x1: node.x1, nu1: node.nu1 });
                stack.push(Node { x0: node.x0, nu0: node.nu0, x1: s.x, nu1: s.mu });
            } else {
                let count = last - first + 1;
                values.extend(std::iter::repeat_n(mid, count));
                brackets.push(Bracket { x0: node.x0, x1: node.x1, value: mid, first_ordinal: first, count });
            }
        }
        Ok(EigResult {
            values,
            inertia_evals: self.eval.evaluations(),
            singular_retries: self.retries,
            unresolved_singular: self.unresolved,
            splits: self.splits,
            brackets,
            norm: self.norm,
        })
    }
}

/// All `n` eigenvalues, starting from the bracket `[-‖A‖₁, ‖A‖₁)`.
pub fn eig_all(a: &CsrMatrix, params: &BisectionParams) -> Result<EigResult> {
    let b = Bisector::new(a, *params)?;
    let root = b.root();
    b.run(root, None)
}

/// Eigenvalues in the half-open interval `[x0, x1)`.
pub fn eig_in_interval(a: &CsrMatrix, params: &BisectionParams, x0: f64, x1: f64) -> Result<EigResult> {
    if !(x0 < x1) {
        return Err(Error::InvalidParameter(format!("interval [{x0}, {x1}) is empty or invalid")));
    }
    let mut b = Bisector::new(a, *params)?;
    let nu0 = b.count_at(x0)?;
    let nu1 = b.count_at(x1)?.max(nu0);
    b.run(Node { x0, nu0, x1, nu1 }, None)
}

/// Eigenvalues `λ_lo ..= λ_hi` (1-based, ascending order).
pub fn eig_by_ordinal(a: &CsrMatrix, params: &BisectionParams, lo: usize, hi: usize) -> Result<EigResult> {
    let n = a.n();
    if lo == 0 || lo > hi || hi > n {
        return Err(Error::OrdinalOutOfRange { lo, hi, n });
    }
    let b = Bisector::new(a, *params)?;
    let root = b.root();
    b.run(root, Some((lo, hi)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntervalCount {
    /// `ν(A - x1 I) - ν(A - x0 I)`.
    pub count: i64,
    /// One of the endpoint evaluations met a singular leading minor.
    pub singular_warning: bool,
}

/// Number of eigenvalues in `[x0, x1)`.
pub fn count_in_interval(a: &CsrMatrix, variant: Variant, x0: f64, x1: f64) -> Result<IntervalCount> {
    if !(x0 <= x1) {
        return Err(Error::InvalidParameter(format!("interval [{x0}, {x1}) is invalid")));
    }
    if x0 == x1 {
        return Ok(IntervalCount { count: 0, singular_warning: false });
    }
    let mut e = ShiftedInertia::new(a, variant);
    let r0 = e.eval(x0)?;
    let r1 = e.eval(x1)?;
    Ok(IntervalCount {
        count: r1.nu as i64 - r0.nu as i64,
        singular_warning: r0.singular_minor || r1.singular_minor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(d: &[f64]) -> CsrMatrix {
        let t: Vec<_> = d.iter().enumerate().map(|(i, &v)| (i, i, v)).collect();
        CsrMatrix::from_triplets(d.len(), &t).unwrap()
    }

    fn tridiag(n: usize) -> CsrMatrix {
        let mut t = Vec::new();
        for i in 0..n {
            t.push((i, i, 2.0));
            if i > 0 {
                t.push((i, i - 1, -1.0));
            }
        }
        CsrMatrix::from_triplets(n, &t).unwrap()
    }

    #[test]
    fn diagonal_spectrum() {
        let a = diag(&[3.0, 1.0, 2.0]);
        let p = BisectionParams::with_tau(1e-12);
        let r = eig_all(&a, &p).unwrap();
        assert_eq!(r.values.len(), 3);
        for (v, e) in r.values.iter().zip([1.0, 2.0, 3.0]) {
            assert!((v - e).abs() <= 2.0 * 1e-12 * 6.0, "{v} vs {e}");
        }
    }

    #[test]
    fn tridiagonal_closed_form() {
        let a = tridiag(4);
        let p = BisectionParams::default();
        let r = eig_all(&a, &p).unwrap();
        for (k, v) in r.values.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 5.0).cos();
            assert!((v - exact).abs() <= 4.0 * p.tau * r.norm, "{v} vs {exact}");
        }
    }

    #[test]
    fn interval_and_ordinals() {
        let a = diag(&[5.0, 5.0, 5.0, 1.0]);
        let p = BisectionParams::default();
        let r = eig_in_interval(&a, &p, 4.5, 5.5).unwrap();
        assert_eq!(r.values.len(), 3);
        assert!(r.values.iter().all(|v| (v - 5.0).abs() < 1e-13));

        let single = diag(&[5.0]);
        assert!(eig_in_interval(&single, &p, 1.0, 1.000001).unwrap().values.is_empty());

        let b = diag(&[10.0, 20.0, 30.0]);
        let r = eig_by_ordinal(&b, &p, 2, 2).unwrap();
        assert_eq!(r.values.len(), 1);
        assert!((r.values[0] - 20.0).abs() < 1e-12);

        let c = diag(&[7.0, 7.0]);
        let r = eig_by_ordinal(&c, &p, 2, 2).unwrap();
        assert_eq!(r.values.len(), 1);
        assert!((r.values[0] - 7.0).abs() < 1e-13);
    }

    #[test]
    fn counts() {
        let a = diag(&[-1.0, 0.0, 1.0]);
        assert_eq!(count_in_interval(&a, Variant::Elementary, -2.0, 0.0).unwrap().count, 1);
        assert_eq!(count_in_interval(&a, Variant::Givens, -2.0, 2.0).unwrap().count, 3);
        let deg = count_in_interval(&a, Variant::Elementary, 0.5, 0.5).unwrap();
        assert_eq!(deg.count, 0);
        assert!(count_in_interval(&a, Variant::Elementary, 1.0, 0.0).is_err());
        // at x = 0 the middle diagonal vanishes
        assert!(count_in_interval(&a, Variant::Elementary, 0.0, 2.0).unwrap().singular_warning);
    }

    #[test]
    fn parameter_and_ordinal_errors() {
        let a = diag(&[1.0, 2.0]);
        assert!(eig_all(&a, &BisectionParams::with_tau(0.0)).is_err());
        assert!(eig_all(&a, &BisectionParams::with_tau(1.5)).is_err());
        assert!(matches!(
            eig_by_ordinal(&a, &BisectionParams::default(), 0, 1),
            Err(Error::OrdinalOutOfRange { .. })
        ));
        assert!(eig_by_ordinal(&a, &BisectionParams::default(), 2, 3).is_err());
        assert!(eig_in_interval(&a, &BisectionParams::default(), 1.0, 1.0).is_err());
    }

    #[test]
    fn zero_matrix_has_zero_spectrum() {
        let a = CsrMatrix::from_triplets(3, &[]).unwrap();
        let r = eig_all(&a, &BisectionParams::default()).unwrap();
        assert_eq!(r.values, vec![0.0; 3]);
        assert_eq!(r.inertia_evals, 0);
    }

    #[test]
    fn singular_split_points_are_nudged() {
        // split points 0, then ±1.5 ... hit nothing; force x = 0 onto an eigenvalue
        let a = diag(&[-1.0, 0.0, 1.0]);
        let r = eig_all(&a, &BisectionParams::default()).unwrap();
        assert!(r.singular_retries >= 1);
        assert_eq!(r.unresolved_singular, 0);
        assert_eq!(r.values.len(), 3);
        assert!(r.values[1].abs() < 1e-14);
    }

    #[test]
    fn tree_conserves_counts() {
        let a = tridiag(12);
        let r = eig_all(&a, &BisectionParams::default()).unwrap();
        for s in &r.splits {
            assert!(s.nu0 <= s.mu && s.mu <= s.nu1);
            assert!(s.x0 < s.x && s.x < s.x1);
        }
        assert_eq!(r.brackets.iter().map(|b| b.count).sum::<usize>(), 12);
        assert!(r.values.windows(2).all(|w| w[0] <= w[1]));
    }
}
