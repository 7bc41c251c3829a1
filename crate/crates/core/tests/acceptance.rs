//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::Command;
use std::time::Instant;

use inertia::eig::{count_in_interval, eig_all, BisectionParams};
use inertia::factor::{det_sign_sequence, factorize, negative_index, ShiftedInertia};
use inertia::oracle::gen::{
    diagonal, grid_laplacian, random_gaussian_symmetric, random_integer_symmetric, random_sparse_symmetric,
    tridiagonal, tridiagonal_eigenvalues,
};
use inertia::oracle::{
    dense_negative_index, exact_det_signs, jacobi_eigenvalues, latms_generate, negative_count, DenseSym, LatmsSpec,
};
use inertia::symbolic::{allocate_capacities, analyze};
use inertia::{CsrMatrix, Sign, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const U: f64 = f64::EPSILON / 2.0;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in [8, 16, 32, 64] {
        for seed in 0..100u64 {
            let d = random_gaussian_symmetric(n, seed);
            let truth = negative_count(&jacobi_eigenvalues(&d, 1e-14).expect("jacobi converges"));
            let dense = dense_negative_index(&d);
            let a = d.to_csr();
            let counts = analyze(&a);
            let el = negative_index(&a, Variant::Elementary, &counts).unwrap();
            let gv = negative_index(&a, Variant::Givens, &counts).unwrap();
            let exact = (el.nu, el.interchanges, el.singular_minor) == (dense.nu, dense.interchanges, dense.singular);
            if el.nu != truth || gv.nu != truth || !exact {
                failures.push(format!("n={n} seed={seed}"));
            }
            checked += 1;
        }
    }
    outcome(failures.is_empty(), format!("{checked} matrices, mismatches: {failures:?}"))
}

fn sign_equivalence() -> Outcome {
    let (mut accepted, mut skipped, mut seed) = (0, 0, 0u64);
    let mut failures = Vec::new();
    while accepted < 100 {
        let n = 1 + (seed % 8) as usize;
        let e = random_integer_symmetric(n, -3, 3, seed);
        let exact = exact_det_signs(n, &e).unwrap();
        if exact.contains(&Sign::Zero) {
            skipped += 1;
        } else {
            let a = DenseSym::new(n, e.iter().map(|&v| v as f64).collect()).unwrap().to_csr_sparse();
            for v in [Variant::Elementary, Variant::Givens] {
                if det_sign_sequence(&a, v).unwrap() != exact {
                    failures.push(format!("seed={seed} {v}"));
                }
            }
            accepted += 1;
        }
        seed += 1;
    }
    outcome(failures.is_empty(), format!("{accepted} matrices ({skipped} with zero minors skipped), mismatches: {failures:?}"))
}

fn max_normalized_error(spec: LatmsSpec, variant: Variant) -> f64 {
    let m = latms_generate(&spec).unwrap();
    let a = m.matrix.to_csr();
    let params = BisectionParams { variant, ..BisectionParams::with_tau(2f64.powi(-52)) };
    let r = eig_all(&a, &params).unwrap();
    let planted = m.sorted_eigenvalues();
    let err = r.values.iter().zip(&planted).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    err / a.one_norm()
}

fn bisection_accuracy() -> Outcome {
    let tol = 10.0 * U;
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for mode in 1..=6u8 {
        for kappa in [1e2, 1e4, 1e8] {
            let spec = LatmsSpec { n: 64, mode, kappa, seed: 1000 * mode as u64 + kappa.log10() as u64 };
            let e = max_normalized_error(spec, Variant::Elementary);
            worst = worst.max(e);
            if e > tol {
                failures.push(format!("mode={mode} kappa={kappa:e}: {e:.2e}"));
            }
        }
    }
    let spot = max_normalized_error(LatmsSpec { n: 256, mode: 6, kappa: 1.0, seed: 256 }, Variant::Elementary);
    if spot > tol {
        failures.push(format!("n=256 mode=6: {spot:.2e}"));
    }
    outcome(
        failures.is_empty(),
        format!("max error/‖A‖₁ {worst:.2e} over 18 runs, n=256 spot check {spot:.2e}, limit {tol:.2e}; failures: {failures:?}"),
    )
}

fn fill_containment() -> Outcome {
    let mut corpus: Vec<(String, CsrMatrix)> = (10..=30).map(|m| (format!("grid{m}"), grid_laplacian(m, 1.5))).collect();
    for seed in 0..200u64 {
        let n = 10 + (seed as usize * 37) % 191;
        let density = 0.005 + 0.045 * (seed % 10) as f64 / 9.0;
        corpus.push((format!("sparse{seed}"), random_sparse_symmetric(n, density, seed)));
    }
    let mut failures = Vec::new();
    let mut rows = 0;
    for (name, a) in &corpus {
        let counts = analyze(a);
        let caps = allocate_capacities(a, &counts);
        let (el, gv) = match (
            factorize(a, Variant::Elementary, &caps),
            factorize(a, Variant::Givens, &caps),
        ) {
            (Ok(e), Ok(g)) => (e.patterns(), g.patterns()),
            (e, g) => {
                failures.push(format!("{name}: {:?} {:?}", e.err(), g.err()));
                continue;
            }
        };
        for i in 0..a.n() {
            let contained = el[i].iter().all(|c| gv[i].binary_search(c).is_ok());
            if !contained || gv[i].len() > counts.counts[i] {
                failures.push(format!("{name} row {i}"));
                break;
            }
        }
        rows += a.n();
    }
    outcome(failures.is_empty(), format!("{} matrices, {rows} rows, violations: {failures:?}", corpus.len()))
}

fn flop_ordering() -> Outcome {
    let a = grid_laplacian(30, 1.5);
    let counts = analyze(&a);
    let el = negative_index(&a, Variant::Elementary, &counts).unwrap();
    let gv = negative_index(&a, Variant::Givens, &counts).unwrap();
    let ratio = el.flops as f64 / gv.flops as f64;
    outcome(
        ratio < 0.5,
        format!("elementary {} flops, givens {} flops, ratio {ratio:.4}", el.flops, gv.flops),
    )
}

fn monotonicity_and_conservation() -> Outcome {
    let mut failures = Vec::new();
    let (mut skipped, mut clamped) = (0, 0);
    for seed in 0..50u64 {
        let a = random_gaussian_symmetric(32, 5000 + seed).to_csr();
        let norm = a.one_norm();
        for v in [Variant::Elementary, Variant::Givens] {
            let mut e = ShiftedInertia::new(&a, v);
            let mut last = 0;
            for k in 0..64 {
                let x = -norm + 2.0 * norm * k as f64 / 63.0;
                let r = e.eval(x).unwrap();
                if r.singular_minor {
                    skipped += 1;
                    continue;
                }
                if r.nu < last {
                    failures.push(format!("seed={seed} {v}: nu fell at x={x}"));
                }
                last = r.nu;
            }
            let res = eig_all(&a, &BisectionParams { variant: v, ..BisectionParams::default() }).unwrap();
            let total: usize = res.brackets.iter().map(|b| b.count).sum();
            let conserved = res.splits.iter().all(|s| s.nu0 <= s.mu && s.mu <= s.nu1)
                && total == 32
                && res.values.len() == 32;
            clamped += res.splits.iter().filter(|s| s.clamped).count();
            if !conserved {
                failures.push(format!("seed={seed} {v}: conservation"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("50 matrices x 2 variants, {skipped} singular points skipped, {clamped} clamped splits; failures: {failures:?}"),
    )
}

fn instability_demo() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_inertia"))
        .args(["demo-instability", "--n", "256", "--json"])
        .output()
        .expect("binary runs");
    let code = out.status.code();
    let v: serde_json::Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("exit {code:?}, unparsable output: {e}")),
    };
    let pass = matches!(code, Some(0 | 3)) && v["jacobi_nu"] == 128;
    outcome(
        pass,
        format!(
            "jacobi nu {}, elementary nu {}, givens nu {}, discrepancy {}, kappa {}",
            v["jacobi_nu"], v["elementary_nu"], v["givens_nu"], v["discrepancy"], v["kappa"]
        ),
    )
}

fn analytic_count(ev: &[f64], a: f64, b: f64) -> i64 {
    ev.iter().filter(|&&l| a <= l && l < b).count() as i64
}

fn interval_counting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    for trial in 0..1000 {
        let n = rng.gen_range(1..=100);
        let (a, ev) = if trial % 2 == 0 {
            let d: Vec<f64> = (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect();
            (diagonal(&d), d)
        } else {
            (tridiagonal(n, 2.0, -1.0), tridiagonal_eigenvalues(n, 2.0, -1.0))
        };
        let (mut x0, mut x1) = (rng.gen_range(-11.0..11.0), rng.gen_range(-11.0..11.0));
        if x0 > x1 {
            std::mem::swap(&mut x0, &mut x1);
        }
        let variant = if trial % 4 < 2 { Variant::Elementary } else { Variant::Givens };
        let got = count_in_interval(&a, variant, x0, x1).unwrap();
        let want = analytic_count(&ev, x0, x1);
        if got.count != want {
            failures.push(format!("trial {trial}: n={n} [{x0}, {x1}) got {} want {want}", got.count));
        }
    }
    outcome(failures.is_empty(), format!("1000 intervals, mismatches: {failures:?}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence", oracle_equivalence),
        ("determinant sign equivalence", sign_equivalence),
        ("bisection accuracy", bisection_accuracy),
        ("fill containment", fill_containment),
        ("flop ordering", flop_ordering),
        ("monotonicity and conservation", monotonicity_and_conservation),
        ("instability demo", instability_demo),
        ("interval counting", interval_counting),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!(
            "criterion {} {status} {name} ({:.1}s): {}",
            k + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
