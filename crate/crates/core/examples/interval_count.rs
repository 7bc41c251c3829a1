//! Counting eigenvalues in intervals without computing them.

use inertia::eig::count_in_interval;
use inertia::factor::ShiftedInertia;
use inertia::oracle::gen::grid_laplacian;
use inertia::Variant;

fn main() -> inertia::Result<()> {
    // 2-D Laplacian on a 20 x 20 grid: spectrum lies in (0, 8).
    let a = grid_laplacian(20, 0.0);
    for (lo, hi) in [(0.0, 1.0), (1.0, 4.0), (4.0, 8.0), (0.0, 8.0)] {
        let c = count_in_interval(&a, Variant::Elementary, lo, hi)?;
        println!("[{lo}, {hi}): {} eigenvalues", c.count);
    }

    // Histogram of the spectrum from one reusable evaluator.
    let mut eval = ShiftedInertia::new(&a, Variant::Elementary);
    let mut prev = eval.eval(0.0)?.nu;
    for k in 1..=8 {
        let nu = eval.eval(k as f64)?.nu;
        println!("  [{}, {k}) {:>4} {}", k - 1, nu - prev, "#".repeat((nu - prev) / 4));
        prev = nu;
    }
    println!("{} factorizations", eval.evaluations());
    Ok(())
}
