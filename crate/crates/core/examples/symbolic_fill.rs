//! Predicted row counts of the triangular factor against the fill actually
//! produced by each variant.

use inertia::factor::factorize;
use inertia::oracle::gen::grid_laplacian;
use inertia::symbolic::{allocate_capacities, analyze, col_etree};
use inertia::Variant;

fn main() -> inertia::Result<()> {
    for m in [5, 10, 20, 30] {
        let a = grid_laplacian(m, 1.5);
        let counts = analyze(&a);
        let caps = allocate_capacities(&a, &counts);
        let el = factorize(&a, Variant::Elementary, &caps)?;
        let gv = factorize(&a, Variant::Givens, &caps)?;
        let roots = col_etree(&a).parent.iter().filter(|p| p.is_none()).count();
        println!(
            "{m:>2}x{m:<2} nnz(A) {:>6}  predicted {:>7}  givens {:>7}  elementary {:>7}  etree roots {roots}",
            a.nnz(),
            counts.total(),
            gv.report.final_nnz,
            el.report.final_nnz,
        );
    }
    Ok(())
}
