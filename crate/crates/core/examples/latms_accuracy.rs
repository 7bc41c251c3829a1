//! Bisection accuracy against planted spectra for the six LATMS-style
//! eigenvalue distributions.

use inertia::eig::{eig_all, BisectionParams};
use inertia::oracle::{latms_generate, LatmsSpec};

fn main() -> inertia::Result<()> {
    let n = 48;
    let u = f64::EPSILON / 2.0;
    println!("{:>4} {:>8} {:>12} {:>8}", "mode", "kappa", "err/|A|_1", "in u");
    for mode in 1..=6u8 {
        for kappa in [1e2, 1e4, 1e8] {
            let m = latms_generate(&LatmsSpec { n, mode, kappa, seed: 7 })?;
            let a = m.matrix.to_csr();
            let r = eig_all(&a, &BisectionParams::default())?;
            let err = r
                .values
                .iter()
                .zip(m.sorted_eigenvalues())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
                / r.norm;
            println!("{mode:>4} {kappa:>8.0e} {err:>12.2e} {:>8.2}", err / u);
        }
    }
    Ok(())
}
