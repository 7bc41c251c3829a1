//! Round trip through Matrix Market and permutation files, then a reordered
//! run report as JSON.

use inertia::io::{apply_ordering, read_matrix_market, run_report, write_matrix_market, Permutation};
use inertia::oracle::gen::grid_laplacian;
use inertia::Variant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("inertia-example");
    std::fs::create_dir_all(&dir)?;

    let m = 12;
    let a = grid_laplacian(m, 1.5);
    let mtx = dir.join("grid12.mtx");
    std::fs::write(&mtx, write_matrix_market(&a))?;
    let b = read_matrix_market(&mtx)?;
    assert_eq!(a, b);

    // Red-black numbering: all even cells first, a much wider band.
    let red_black: Vec<usize> = (0..m * m)
        .filter(|i| (i / m + i % m) % 2 == 0)
        .chain((0..m * m).filter(|i| (i / m + i % m) % 2 == 1))
        .collect();
    let perm_file = dir.join("redblack.perm");
    let text: String = red_black.iter().map(|p| format!("{p}\n")).collect();
    std::fs::write(&perm_file, text)?;
    let p = Permutation::read(&perm_file, b.n())?;

    for (name, matrix) in [("natural", b.clone()), ("redblack", apply_ordering(&b, &p)?)] {
        let r = run_report(&matrix, "grid12", name, Variant::Givens)?;
        println!("{}", serde_json::to_string(&r)?);
    }
    println!("files in {}", dir.display());
    Ok(())
}
