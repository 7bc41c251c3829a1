//! Row counts of the `R` factor of `A = QR`, used to size ECSR rows.
//!
//! The structure of `R` coincides with that of the Cholesky factor of `AᵀA`,
//! so the counts are column counts of that factor. They are computed from
//! the rows of `A` without forming `AᵀA`: a column elimination tree, its
//! postorder, and the skeleton/least-common-ancestor column count scheme.
//! [`symbolic_givens_rows`] is a quadratic row-merge simulation kept as an
//! independent check.

use crate::sparse::CsrMatrix;

/// Column elimination tree: the elimination tree of `AᵀA`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColEtree {
    pub parent: Vec<Option<usize>>,
}

impl ColEtree {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Children-before-parent ordering of the forest.
    pub fn postorder(&self) -> Vec<usize> {
        let n = self.n();
        const NONE: usize = usize::MAX;
        let mut head = vec![NONE; n];
        let mut next = vec![NONE; n];
        for j in (0..n).rev() {
            if let Some(p) = self.parent[j] {
                next[j] = head[p];
                head[p] = j;
            }
        }
        let mut post = Vec::with_capacity(n);
        let mut stack = Vec::new();
        for root in (0..n).filter(|&j| self.parent[j].is_none()) {
            stack.push(root);
            while let Some(&p) = stack.last() {
                let child = head[p];
                if child == NONE {
                    stack.pop();
                    post.push(p);
                } else {
                    head[p] = next[child];
                    stack.push(child);
                }
            }
        }
        post
    }
}

/// Predicted number of entries in each row of `R`, diagonal included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCounts {
    pub counts: Vec<usize>,
}

impl RowCounts {
    /// Dense upper bound `n - i`. Always safe, never tight for sparse input.
    pub fn safe_overestimate(n: usize) -> Self {
        RowCounts { counts: (0..n).map(|i| n - i).collect() }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Column elimination tree of `a`, with path compression.
///
/// Walks the columns of `a`; because the pattern is symmetric, column `k`
/// has the same pattern as row `k`.
pub fn col_etree(a: &CsrMatrix) -> ColEtree {
    let n = a.n();
    const NONE: usize = usize::MAX;
    let mut parent = vec![None; n];
    let mut ancestor = vec![NONE; n];
    // last column seen so far in each row
    let mut prev = vec![NONE; n];
    for k in 0..n {
        for &row in a.row_cols(k) {
            let mut i = prev[row];
            while i != NONE && i < k {
                let inext = ancestor[i];
                ancestor[i] = k;
                if inext == NONE {
                    parent[i] = Some(k);
                }
                i = inext;
            }
            prev[row] = k;
        }
    }
    ColEtree { parent }
}

/// Least-common-ancestor bookkeeping for the skeleton column count scheme.
struct LeafState {
    first: Vec<isize>,
    maxfirst: Vec<isize>,
    prevleaf: Vec<isize>,
    ancestor: Vec<isize>,
}

impl LeafState {
    /// Decides whether column `j` is a leaf of row `i`'s row subtree. Returns
    /// `(lca, kind)`: kind 0 = not a leaf, 1 = first leaf, 2 = later leaf
    /// whose least common ancestor with the previous leaf is `lca`.
    fn leaf(&mut self, i: usize, j: usize) -> (isize, u8) {
        if i <= j || self.first[j] <= self.maxfirst[i] {
            return (-1, 0);
        }
        self.maxfirst[i] = self.first[j];
        let jprev = self.prevleaf[i];
        self.prevleaf[i] = j as isize;
        if jprev == -1 {
            return (i as isize, 1);
        }
        let mut q = jprev;
        while q != self.ancestor[q as usize] {
            q = self.ancestor[q as usize];
        }
        let mut s = jprev;
        while s != q {
            let sparent = self.ancestor[s as usize];
            self.ancestor[s as usize] = q;
            s = sparent;
        }
        (q, 2)
    }
}

/// Exact structural row counts of `R` for the no-cancellation QR of `a`.
pub fn r_row_counts(a: &CsrMatrix, tree: &ColEtree) -> RowCounts {
    let n = a.n();
    let parent: Vec<isize> = tree
        .parent
        .iter()
        .map(|p| p.map_or(-1, |p| p as isize))
        .collect();
    let post = tree.postorder();
    let mut delta = vec![0isize; n];
    let mut st = LeafState {
        first: vec![-1; n],
        maxfirst: vec![-1; n],
        prevleaf: vec![-1; n],
        ancestor: (0..n as isize).collect(),
    };

    for (k, &j) in post.iter().enumerate() {
        delta[j] = if st.first[j] == -1 { 1 } else { 0 };
        let mut jj = j as isize;
        while jj != -1 && st.first[jj as usize] == -1 {
            st.first[jj as usize] = k as isize;
            jj = parent[jj as usize];
        }
    }

    // Each row of A joins the list of the earliest postordered column it touches.
    let mut inv_post = vec![0usize; n];
    for (k, &j) in post.iter().enumerate() {
        inv_post[j] = k;
    }
    const NONE: usize = usize::MAX;
    let mut list_head = vec![NONE; n];
    let mut list_next = vec![NONE; n];
    for i in 0..n {
        if let Some(k) = a.row_cols(i).iter().map(|&c| inv_post[c]).min() {
            list_next[i] = list_head[k];
            list_head[k] = i;
        }
    }

    for (k, &j) in post.iter().enumerate() {
        if parent[j] != -1 {
            delta[parent[j] as usize] -= 1;
        }
        let mut row = list_head[k];
        while row != NONE {
            for &i in a.row_cols(row) {
                let (q, kind) = st.leaf(i, j);
                if kind >= 1 {
                    delta[j] += 1;
                }
                if kind == 2 {
                    delta[q as usize] -= 1;
                }
            }
            row = list_next[row];
        }
        if parent[j] != -1 {
            st.ancestor[j] = parent[j];
        }
    }

    for j in 0..n {
        if parent[j] != -1 {
            delta[parent[j] as usize] += delta[j];
        }
    }
    RowCounts {
        counts: delta.into_iter().map(|c| c as usize).collect(),
    }
}

/// Convenience: tree plus counts.
pub fn analyze(a: &CsrMatrix) -> RowCounts {
    r_row_counts(a, &col_etree(a))
}

/// Per-row ECSR capacity: room for the predicted `R` row or the input row,
/// whichever is larger.
pub fn allocate_capacities(a: &CsrMatrix, counts: &RowCounts) -> Vec<usize> {
    counts
        .counts
        .iter()
        .enumerate()
        .map(|(i, &c)| c.max(a.row_nnz(i)))
        .collect()
}

/// Brute-force symbolic row-by-row Givens QR. Each elimination replaces both
/// rows' structure with their union, minus the annihilated position. Returns
/// the final column set of every row of `R`.
pub fn symbolic_givens_rows(a: &CsrMatrix) -> Vec<Vec<usize>> {
    let n = a.n();
    let mut r: Vec<Vec<usize>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut work: Vec<usize> = a.row_cols(k).to_vec();
        while let Some(&j) = work.first() {
            if j >= k {
                break;
            }
            let union = sorted_union(&r[j], &work);
            r[j] = union.iter().copied().filter(|&c| c >= j).collect();
            work = union.into_iter().filter(|&c| c > j).collect();
        }
        r.push(work);
    }
    r
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
