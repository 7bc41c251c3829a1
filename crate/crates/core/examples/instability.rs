//! A well-conditioned saddle-point matrix with nearly singular leading
//! minors, where the computed count can miss.

use inertia::oracle::instability_report;

fn main() -> inertia::Result<()> {
    println!("{:>5} {:>5} {:>10} {:>7} {:>11} {:>7}", "n", "seed", "kappa", "jacobi", "elementary", "givens");
    for n in [32, 64, 128, 256] {
        for seed in 0..3 {
            let r = instability_report(n, seed)?;
            println!(
                "{n:>5} {seed:>5} {:>10.1} {:>7} {:>11} {:>7}{}",
                r.kappa,
                r.jacobi_nu,
                r.elementary_nu,
                r.givens_nu,
                if r.discrepancy { "  <- discrepancy" } else { "" }
            );
        }
    }
    Ok(())
}
