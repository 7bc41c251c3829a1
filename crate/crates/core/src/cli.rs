//! Command-line front end for the `inertia` binary.
//!
//! Exit codes: 0 success, 1 usage error, 2 input or computation error,
//! 3 results printed but a singular leading minor was met.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::eig::{count_in_interval, eig_all, eig_by_ordinal, eig_in_interval, BisectionParams};
use crate::error::{Error, Result};
use crate::factor::Variant;
use crate::io::{apply_ordering, eigenvalues_csv, read_matrix_market, run_report, Permutation, RunReport};
use crate::oracle::instability_report;
use crate::sparse::CsrMatrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "inertia", version, about = "Inertia and eigenvalues of sparse symmetric matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    /// Matrix Market file.
    file: PathBuf,
    /// Symmetric reordering, one 0-based index per line.
    #[arg(long, value_name = "FILE")]
    perm: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of negative eigenvalues of A - shift*I.
    Inertia {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(long, default_value_t = Variant::Elementary)]
        variant: Variant,
        #[arg(long, allow_negative_numbers = true)]
        shift: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalues by bisection.
    Eig {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(long, conflicts_with_all = ["interval", "ordinals"])]
        all: bool,
        /// Half-open interval [A, B).
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, conflicts_with = "ordinals")]
        interval: Option<Vec<f64>>,
        /// 1-based ordinals LO..=HI in ascending order.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        ordinals: Option<Vec<usize>>,
        #[arg(long, default_value_t = f64::EPSILON)]
        tau: f64,
        #[arg(long, default_value_t = Variant::Elementary)]
        variant: Variant,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Number of eigenvalues in [A, B).
    Count {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, required = true)]
        interval: Vec<f64>,
        #[arg(long, default_value_t = Variant::Elementary)]
        variant: Variant,
        #[arg(long)]
        json: bool,
    },
    /// Run reports for both variants with predicted and actual fill.
    Stats {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(long)]
        json: bool,
    },
    /// Factor the ill-conditioned saddle-point example and compare with Jacobi.
    DemoInstability {
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

struct Loaded {
    a: CsrMatrix,
    name: String,
    ordering: String,
}

fn load(input: &MatrixArgs) -> Result<Loaded> {
    let a = read_matrix_market(&input.file)?;
    let name = file_stem(&input.file);
    match &input.perm {
        None => Ok(Loaded { a, name, ordering: "natural".into() }),
        Some(path) => {
            let p = Permutation::read(path, a.n())?;
            Ok(Loaded { a: apply_ordering(&a, &p)?, name, ordering: file_stem(path) })
        }
    }
}

fn file_stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let s = serde_json::to_string(value).expect("report types serialize");
    writeln!(out, "{s}")
}

fn write_report_text(out: &mut dyn Write, r: &RunReport) -> std::io::Result<()> {
    writeln!(out, "matrix          {}", r.matrix)?;
    writeln!(out, "n               {}", r.n)?;
    writeln!(out, "nnz             {}", r.nnz)?;
    writeln!(out, "variant         {}", r.variant)?;
    writeln!(out, "ordering        {}", r.ordering)?;
    writeln!(out, "nu              {}", r.nu)?;
    writeln!(out, "singular_minor  {}", r.singular_minor)?;
    writeln!(out, "interchanges    {}", r.interchanges)?;
    writeln!(out, "flops           {}", r.flops)?;
    writeln!(out, "final_nnz       {}", r.final_nnz)?;
    writeln!(out, "predicted_nnz   {}", r.predicted_nnz)?;
    writeln!(out, "max_row_nnz     {}", r.max_row_nnz)?;
    writeln!(out, "fill_ratio      {:.4}", r.fill_ratio)?;
    writeln!(out, "wall_time_secs  {:.6}", r.wall_time_secs)
}

#[derive(Serialize)]
struct EigOutput<'a> {
    matrix: &'a str,
    n: usize,
    variant: Variant,
    ordering: &'a str,
    tau: f64,
    first_ordinal: usize,
    values: &'a [f64],
    inertia_evals: usize,
    singular_retries: usize,
    unresolved_singular: usize,
}

#[derive(Serialize)]
struct CountOutput<'a> {
    matrix: &'a str,
    a: f64,
    b: f64,
    count: i64,
    singular_warning: bool,
}

#[derive(Serialize)]
struct StatsOutput {
    reports: Vec<RunReport>,
    predicted_nnz: usize,
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidParameter(_) | Error::OrdinalOutOfRange { .. } => EXIT_USAGE,
                _ => EXIT_INPUT,
            }
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn status(singular: bool) -> i32 {
    if singular {
        EXIT_SINGULAR
    } else {
        EXIT_OK
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    match cmd {
        Command::Inertia { input, variant, shift, json } => {
            let m = load(&input)?;
            let a = match shift {
                Some(x) if !x.is_finite() => {
                    return Err(Error::InvalidParameter(format!("shift {x} is not finite")).into())
                }
                Some(x) => m.a.shift(x),
                None => m.a,
            };
            let r = run_report(&a, &m.name, &m.ordering, variant)?;
            if json {
                json_line(out, &r)?;
            } else {
                write_report_text(out, &r)?;
            }
            Ok(status(r.singular_minor))
        }
        Command::Eig { input, all: _, interval, ordinals, tau, variant, json, csv } => {
            let m = load(&input)?;
            let params = BisectionParams { tau, variant, ..BisectionParams::default() };
            let (res, first) = match (interval, ordinals) {
                (Some(iv), _) => {
                    let res = eig_in_interval(&m.a, &params, iv[0], iv[1])?;
                    let first = res.brackets.first().map_or(1, |b| b.first_ordinal);
                    (res, first)
                }
                (None, Some(o)) => (eig_by_ordinal(&m.a, &params, o[0], o[1])?, o[0]),
                (None, None) => (eig_all(&m.a, &params)?, 1),
            };
            if json {
                json_line(
                    out,
                    &EigOutput {
                        matrix: &m.name,
                        n: m.a.n(),
                        variant,
                        ordering: &m.ordering,
                        tau,
                        first_ordinal: first,
                        values: &res.values,
                        inertia_evals: res.inertia_evals,
                        singular_retries: res.singular_retries,
                        unresolved_singular: res.unresolved_singular,
                    },
                )?;
            } else if csv {
                write!(out, "{}", eigenvalues_csv(first, &res.values))?;
            } else {
                for v in &res.values {
                    writeln!(out, "{v:?}")?;
                }
            }
            Ok(status(res.has_warning()))
        }
        Command::Count { input, interval, variant, json } => {
            let m = load(&input)?;
            let (a, b) = (interval[0], interval[1]);
            let c = count_in_interval(&m.a, variant, a, b)?;
            if json {
                json_line(out, &CountOutput { matrix: &m.name, a, b, count: c.count, singular_warning: c.singular_warning })?;
            } else {
                writeln!(out, "{}", c.count)?;
            }
            Ok(status(c.singular_warning))
        }
        Command::Stats { input, json } => {
            let m = load(&input)?;
            let reports = [Variant::Elementary, Variant::Givens]
                .into_iter()
                .map(|v| run_report(&m.a, &m.name, &m.ordering, v))
                .collect::<Result<Vec<_>>>()?;
            let singular = reports.iter().any(|r| r.singular_minor);
            let predicted_nnz = reports[0].predicted_nnz;
            if json {
                json_line(out, &StatsOutput { reports, predicted_nnz })?;
            } else {
                writeln!(out, "matrix {}  n {}  nnz {}  ordering {}", m.name, m.a.n(), m.a.nnz(), m.ordering)?;
                writeln!(out, "predicted_nnz {predicted_nnz}")?;
                writeln!(
                    out,
                    "{:<12} {:>6} {:>9} {:>14} {:>10} {:>8} {:>10}",
                    "variant", "nu", "singular", "flops", "final_nnz", "fill", "time_s"
                )?;
                for r in &reports {
                    writeln!(
                        out,
                        "{:<12} {:>6} {:>9} {:>14} {:>10} {:>8.3} {:>10.6}",
                        r.variant.to_string(),
                        r.nu,
                        r.singular_minor,
                        r.flops,
                        r.final_nnz,
                        r.fill_ratio,
                        r.wall_time_secs
                    )?;
                }
            }
            Ok(status(singular))
        }
        Command::DemoInstability { n, seed, json } => {
            let r = instability_report(n, seed)?;
            if json {
                json_line(out, &r)?;
            } else {
                writeln!(out, "n                    {}", r.n)?;
                writeln!(out, "seed                 {}", r.seed)?;
                writeln!(out, "kappa                {:.3e}", r.kappa)?;
                writeln!(out, "jacobi_nu            {}", r.jacobi_nu)?;
                writeln!(out, "elementary_nu        {}", r.elementary_nu)?;
                writeln!(out, "givens_nu            {}", r.givens_nu)?;
                writeln!(out, "elementary_singular  {}", r.elementary_singular)?;
                writeln!(out, "givens_singular      {}", r.givens_singular)?;
                writeln!(out, "discrepancy          {}", r.discrepancy)?;
            }
            Ok(status(r.elementary_singular || r.givens_singular))
        }
    }
}
