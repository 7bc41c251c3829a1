//! Work done by the two reductions on grid Laplacians with an indefinite
//! shift.

use inertia::io::run_report;
use inertia::oracle::gen::grid_laplacian;
use inertia::Variant;

fn main() -> inertia::Result<()> {
    println!("{:>5} {:>12} {:>12} {:>7} {:>9} {:>9}", "grid", "elementary", "givens", "ratio", "fill(el)", "fill(gv)");
    for m in [10, 20, 30, 40] {
        let a = grid_laplacian(m, 1.5);
        let el = run_report(&a, "grid", "natural", Variant::Elementary)?;
        let gv = run_report(&a, "grid", "natural", Variant::Givens)?;
        assert_eq!(el.nu, gv.nu);
        println!(
            "{m:>5} {:>12} {:>12} {:>7.3} {:>9.2} {:>9.2}",
            el.flops,
            gv.flops,
            el.flops as f64 / gv.flops as f64,
            el.fill_ratio,
            gv.fill_ratio
        );
    }
    Ok(())
}
