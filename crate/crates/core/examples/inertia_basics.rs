//! Negative eigenvalue count and leading-minor signs of a small matrix.

use inertia::factor::{det_sign_sequence, negative_index, sign_changes};
use inertia::symbolic::analyze;
use inertia::{CsrMatrix, Variant};

fn main() -> inertia::Result<()> {
    // Lower triangle only; mirrors are filled in.
    let a = CsrMatrix::from_triplets(
        4,
        &[(0, 0, 4.0), (1, 0, 1.0), (1, 1, -3.0), (2, 1, 2.0), (2, 2, 1.0), (3, 0, -1.0), (3, 3, -2.0)],
    )?;
    let counts = analyze(&a);
    for variant in [Variant::Elementary, Variant::Givens] {
        let r = negative_index(&a, variant, &counts)?;
        let signs = det_sign_sequence(&a, variant)?;
        let shown: Vec<String> = signs.iter().map(|s| s.to_string()).collect();
        println!(
            "{variant:<10} nu = {}  signs = [{}]  sign changes = {}  interchanges = {}  flops = {}",
            r.nu,
            shown.join(" "),
            sign_changes(&signs),
            r.interchanges,
            r.flops
        );
    }

    // A zero leading minor is flagged; the count is then not trustworthy.
    let swap = CsrMatrix::from_triplets(2, &[(1, 0, 1.0)])?;
    let r = negative_index(&swap, Variant::Elementary, &analyze(&swap))?;
    println!("[[0,1],[1,0]]: nu = {}, singular_minor = {}", r.nu, r.singular_minor);
    Ok(())
}
