//! Row-by-row reduction of a symmetric matrix to upper-triangular form while
//! tracking the signs of its leading principal minors.
//!
//! Row `k` is reduced by eliminating its entries left to right against the
//! already-reduced rows `j < k`. Two elimination operations are offered:
//!
//! * [`Variant::Elementary`]: swap rows `k` and `j` when `|U_jj| < |A_kj|`,
//!   then subtract a multiple of row `j` (pairwise pivoting).
//! * [`Variant::Givens`]: rotate rows `j` and `k` so that `A_kj` vanishes.
//!
//! `det(A_k) = U_11 ⋯ U_kk / det(X_k)` where `X_k` is the implicit product of
//! the transformations. The parity of sign changes between `det(A_{k-1})` and
//! `det(A_k)` is tracked per row; a change adds one to the negative count.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sparse::{CsrMatrix, EcsrMatrix, Ospa, SparseRow, Spa2};
use crate::symbolic::{self, RowCounts};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Elementary,
    Givens,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Elementary => "elementary",
            Variant::Givens => "givens",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "elementary" => Ok(Variant::Elementary),
            "givens" => Ok(Variant::Givens),
            other => Err(Error::InvalidParameter(format!("unknown variant '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: f64) -> Sign {
        if v > 0.0 {
            Sign::Positive
        } else if v < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// Counts sign changes in `1, s_1, s_2, ...`. Zeros are skipped, which only
/// matters when the sequence violates the no-zero hypothesis.
pub fn sign_changes(signs: &[Sign]) -> usize {
    let mut prev = Sign::Positive;
    let mut changes = 0;
    for &s in signs {
        if s == Sign::Zero {
            continue;
        }
        if s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaReport {
    /// Number of negative eigenvalues.
    pub nu: usize,
    /// Some leading minor came out exactly singular; `nu` is then unreliable.
    pub singular_minor: bool,
    pub interchanges: usize,
    pub flops: u64,
    pub final_nnz: usize,
    pub max_row_nnz: usize,
}

/// Result of a full reduction.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub report: InertiaReport,
    /// Sign of `det(A_k)` for `k = 1..n`.
    pub signs: Vec<Sign>,
    /// The reduced upper-triangular rows.
    pub factor: EcsrMatrix,
}

impl Factorization {
    pub fn patterns(&self) -> Vec<Vec<usize>> {
        (0..self.factor.n())
            .map(|i| self.factor.row_cols(i).to_vec())
            .collect()
    }
}

/// `sign(0) := +1`, as used by the interchange parity test.
fn nonnegative(v: f64) -> bool {
    v >= 0.0
}

/// Running sign of `U_11 ⋯ U_kk / det(X_k)`.
#[derive(Debug, Default)]
struct DetTracker {
    zeros: usize,
    odd: bool,
}

impl DetTracker {
    fn push(&mut self, d: f64) {
        if d == 0.0 {
            self.zeros += 1;
        }
        if d < 0.0 {
            self.odd = !self.odd;
        }
    }

    fn replace(&mut self, old: f64, new: f64) {
        if old == 0.0 {
            self.zeros -= 1;
        }
        self.push(new);
        if old < 0.0 {
            self.odd = !self.odd;
        }
    }

    fn interchange(&mut self) {
        self.odd = !self.odd;
    }

    fn sign(&self) -> Sign {
        if self.zeros > 0 {
            Sign::Zero
        } else if self.odd {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

/// Scratch state reused across reductions of matrices of the same order.
#[derive(Debug, Clone)]
pub struct Workspace {
    ospa: Ospa,
    spa: Spa2,
    work: SparseRow,
}

impl Workspace {
    pub fn new(n: usize) -> Self {
        Workspace {
            ospa: Ospa::new(n),
            spa: Spa2::new(n),
            work: SparseRow::default(),
        }
    }
}

/// Reduces `a` into ECSR storage with the given row capacities.
pub fn factorize(a: &CsrMatrix, variant: Variant, capacities: &[usize]) -> Result<Factorization> {
    factorize_with(a, variant, capacities, &mut Workspace::new(a.n()))
}

pub fn factorize_with(
    a: &CsrMatrix,
    variant: Variant,
    capacities: &[usize],
    ws: &mut Workspace,
) -> Result<Factorization> {
    let mut m = EcsrMatrix::build(a, capacities)?;
    // a previous run may have bailed out mid-row
    ws.ospa.clear();
    let mut state = RunState {
        nu: 0,
        singular_minor: false,
        interchanges: 0,
        flops: 0,
        det: DetTracker::default(),
        signs: Vec::with_capacity(a.n()),
    };
    for i in 0..a.n() {
        let odd = match variant {
            Variant::Elementary => elementary_row(&mut m, i, &mut ws.ospa, &mut state)?,
            Variant::Givens => givens_row(&mut m, i, &mut ws.spa, &mut ws.work, &mut state)?,
        };
        if odd {
            state.nu += 1;
        }
        state.signs.push(state.det.sign());
    }
    debug_assert!(m.check_invariants().is_ok());
    Ok(Factorization {
        report: InertiaReport {
            nu: state.nu,
            singular_minor: state.singular_minor,
            interchanges: state.interchanges,
            flops: state.flops,
            final_nnz: m.nnz(),
            max_row_nnz: m.peak_row_len(),
        },
        signs: state.signs,
        factor: m,
    })
}

struct RunState {
    nu: usize,
    singular_minor: bool,
    interchanges: usize,
    flops: u64,
    det: DetTracker,
    signs: Vec<Sign>,
}

impl RunState {
    /// Accounts for the final diagonal of row `i`; returns whether it is negative.
    fn finish_row(&mut self, i: usize, diag: f64) -> Result<bool> {
        if !diag.is_finite() {
            return Err(Error::NonFiniteValue { row: i });
        }
        if diag == 0.0 {
            self.singular_minor = true;
        }
        self.det.push(diag);
        Ok(diag < 0.0)
    }
}

/// One row of the pairwise-pivoting sweep. Returns the parity of the sign
/// change `det(A_{i-1}) -> det(A_i)`.
fn elementary_row(m: &mut EcsrMatrix, i: usize, s: &mut Ospa, st: &mut RunState) -> Result<bool> {
    let mut x = 0u32;
    s.load(m, i)?;
    while let Some((j, aij)) = s.retrieve_head() {
        if j >= i {
            break;
        }
        if aij == 0.0 {
            s.remove_head()?;
            continue;
        }
        let ajj = m.leading_diagonal(j);
        let factor = if ajj.abs() < aij.abs() {
            s.swap(m, j)?;
            st.interchanges += 1;
            x += 1;
            if nonnegative(ajj) != nonnegative(aij) {
                x += 1;
            }
            st.det.interchange();
            st.det.replace(ajj, aij);
            // the accumulator now holds the old pivot row, led by ajj (or nothing)
            s.value(j) / aij
        } else {
            aij / ajj
        };
        st.flops += 1;
        if !factor.is_finite() {
            return Err(Error::NonFiniteValue { row: i });
        }
        st.flops += 2 * s.subtract(m, j, factor) as u64;
        if s.is_occupied(j) {
            debug_assert_eq!(s.retrieve_head().map(|h| h.0), Some(j));
            s.remove_head()?;
        }
    }
    let diag = if s.is_occupied(i) { s.value(i) } else { 0.0 };
    if st.finish_row(i, diag)? {
        x += 1;
    }
    s.store(m, i)?;
    Ok(x % 2 == 1)
}

/// One row of the Givens sweep. Rotations have determinant one, but each
/// replaces the pivot `U_jj` by `r >= 0`, so a negative pivot flips sign.
fn givens_row(
    m: &mut EcsrMatrix,
    k: usize,
    spa: &mut Spa2,
    work: &mut SparseRow,
    st: &mut RunState,
) -> Result<bool> {
    let mut x = 0u32;
    work.clear();
    work.cols.extend_from_slice(m.row_cols(k));
    work.vals.extend_from_slice(m.row_values(k));
    while let Some((j, b)) = work.head() {
        if j >= k {
            break;
        }
        let a = m.leading_diagonal(j);
        let (c, s) = if b == 0.0 {
            (1.0, 0.0)
        } else {
            let r = a.hypot(b);
            st.flops += 5;
            (a / r, b / r)
        };
        if !(c.is_finite() && s.is_finite()) {
            return Err(Error::NonFiniteValue { row: k });
        }
        spa.load_pair(m, j, work);
        st.flops += 6 * spa.rotate(c, s) as u64;
        spa.scatter(m, j, work)?;
        let pivot = m.leading_diagonal(j);
        if !pivot.is_finite() {
            return Err(Error::NonFiniteValue { row: k });
        }
        if nonnegative(a) != nonnegative(pivot) {
            x += 1;
        }
        st.det.replace(a, pivot);
    }
    let diag = match work.head() {
        Some((c, v)) if c == k => v,
        _ => 0.0,
    };
    if st.finish_row(k, diag)? {
        x += 1;
    }
    m.write_row(k, work.len(), work.cols.iter().copied().zip(work.vals.iter().copied()))?;
    Ok(x % 2 == 1)
}

/// Number of negative eigenvalues of `a`, with ECSR rows sized from `counts`.
pub fn negative_index(a: &CsrMatrix, variant: Variant, counts: &RowCounts) -> Result<InertiaReport> {
    let caps = symbolic::allocate_capacities(a, counts);
    factorize(a, variant, &caps).map(|f| f.report)
}

/// Signs of `det(A_1), ..., det(A_n)` as tracked during the reduction.
pub fn det_sign_sequence(a: &CsrMatrix, variant: Variant) -> Result<Vec<Sign>> {
    let caps = symbolic::allocate_capacities(a, &symbolic::analyze(a));
    factorize(a, variant, &caps).map(|f| f.signs)
}

/// Occupied column set of every reduced row, exact-zero slots included.
pub fn structural_pattern(a: &CsrMatrix, variant: Variant) -> Result<Vec<Vec<usize>>> {
    let caps = symbolic::allocate_capacities(a, &symbolic::analyze(a));
    factorize(a, variant, &caps).map(|f| f.patterns())
}

/// Evaluates `ν(A - xI)` repeatedly for one matrix. The symbolic analysis
/// and scratch space are shared across shifts since the pattern never changes.
#[derive(Debug, Clone)]
pub struct ShiftedInertia<'a> {
    base: &'a CsrMatrix,
    shifted: CsrMatrix,
    capacities: Vec<usize>,
    variant: Variant,
    ws: Workspace,
    evaluations: usize,
}

impl<'a> ShiftedInertia<'a> {
    pub fn new(a: &'a CsrMatrix, variant: Variant) -> Self {
        let counts = symbolic::analyze(a);
        ShiftedInertia {
            base: a,
            shifted: a.clone(),
            capacities: symbolic::allocate_capacities(a, &counts),
            variant,
            ws: Workspace::new(a.n()),
            evaluations: 0,
        }
    }

    pub fn matrix(&self) -> &CsrMatrix {
        self.base
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Number of inertia computations performed so far.
    pub fn evaluations(&self) -> usize {
        self.evaluations
    }

    pub fn eval(&mut self, x: f64) -> Result<InertiaReport> {
        self.shifted.shift_in_place(self.base, x);
        self.evaluations += 1;
        factorize_with(&self.shifted, self.variant, &self.capacities, &mut self.ws).map(|f| f.report)
    }
}
