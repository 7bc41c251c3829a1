//! All eigenvalues, a window of ordinals, and an interval, by bisection on
//! the negative count.

use inertia::eig::{eig_all, eig_by_ordinal, eig_in_interval, BisectionParams};
use inertia::oracle::gen::{tridiagonal, tridiagonal_eigenvalues};

fn main() -> inertia::Result<()> {
    let n = 12;
    let a = tridiagonal(n, 2.0, -1.0);
    let exact = tridiagonal_eigenvalues(n, 2.0, -1.0);
    let params = BisectionParams::default();

    let all = eig_all(&a, &params)?;
    println!("{} eigenvalues, {} inertia evaluations", all.values.len(), all.inertia_evals);
    for (k, (got, want)) in all.values.iter().zip(&exact).enumerate() {
        println!("  λ{:<2} = {got:.16}  error {:.1e}", k + 1, (got - want).abs());
    }

    let mid = eig_by_ordinal(&a, &params, 5, 7)?;
    println!("ordinals 5..=7: {:?} ({} evaluations)", mid.values, mid.inertia_evals);

    let low = eig_in_interval(&a, &BisectionParams::with_tau(1e-8), 0.0, 1.0)?;
    println!("in [0, 1) at tau = 1e-8: {:?}", low.values);
    Ok(())
}
