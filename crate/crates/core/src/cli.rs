//! Command-line front end. The `mthull` binary is a thin wrapper around [`run`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::run_checks;
use crate::error::Error;
use crate::galois::{check_kappa, dual_gpm};
use crate::gf::ElementStyle;
use crate::hull::{classify, AssumptionPolicy};
use crate::mtcode::CodeSpec;
use crate::oracle::{min_distance, DEFAULT_BUDGET};
use crate::report::matrix_json;
use crate::text::parse_spec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_SPEC: i32 = 3;
pub const EXIT_ASSUMPTION: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "mthull", version, about = "Hulls and duals of multi-twisted codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduced (Hermite normal form) GPM
    Reduce(Common),
    /// Print the matrix A with A G = diag[x^m_j - λ_j]
    Identical(Common),
    /// Print GPMs of the Euclidean and κ-Galois duals
    Dual(Common),
    /// Print the full hull report
    Hull(Common),
    /// Print the self-orthogonal / LCD verdict
    Classify(Common),
    /// Print the expanded generator matrix over F_q
    Expand {
        #[command(flatten)]
        common: Common,
        /// Print a row-reduced basis instead of all Nℓ shifted rows
        #[arg(long)]
        basis: bool,
    },
    /// Compute the minimum distance by exhaustive enumeration
    Mindist(Common),
    /// Cross-check the polynomial pipeline against dense linear algebra
    OracleCheck(Common),
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Code specification file
    input: PathBuf,
    /// Galois exponent κ, 0 ≤ κ < e
    #[arg(long, default_value_t = 0)]
    kappa: u32,
    /// Proceed when the shift constants violate the hull hypothesis
    #[arg(long)]
    allow_override: bool,
    /// Maximum number of messages enumerated by `mindist`
    #[arg(long, default_value_t = DEFAULT_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// How to write field elements
    #[arg(long, value_enum, default_value_t = Elements::Power)]
    elements: Elements,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Elements {
    /// Powers of the generator, `t^5`
    Power,
    /// Coordinates in the basis 1, t, .., t^(e-1)
    Basis,
}

/// Exit status for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::AssumptionViolated { .. } => EXIT_ASSUMPTION,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID_SPEC,
    }
}

enum Output {
    Text(String),
    Structured(Value),
}

/// Parse `args` (including the program name), execute, write the result to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((output, code)) => {
            let _ = match output {
                Output::Text(s) => write!(out, "{s}"),
                Output::Structured(v) => writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable")),
            };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(path: &PathBuf) -> Result<CodeSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text)
}

fn dispatch(cmd: &Command) -> Result<(Output, i32), Error> {
    let common = match cmd {
        Command::Reduce(c)
        | Command::Identical(c)
        | Command::Dual(c)
        | Command::Hull(c)
        | Command::Classify(c)
        | Command::Mindist(c)
        | Command::OracleCheck(c) => c,
        Command::Expand { common, .. } => common,
    };
    execute(cmd, common)
}

fn execute(cmd: &Command, c: &Common) -> Result<(Output, i32), Error> {
    let spec = load(&c.input)?;
    check_kappa(spec.field(), c.kappa)?;
    let style = match c.elements {
        Elements::Power => ElementStyle::Power,
        Elements::Basis => ElementStyle::Basis,
    };
    let structured = matches!(c.format, Format::Structured);
    let policy = if c.allow_override { AssumptionPolicy::Override } else { AssumptionPolicy::Strict };
    let f = spec.field().clone();
    let lambdas = |ls: &[crate::gf::FieldElement]| -> Vec<String> { ls.iter().map(|&l| f.format(l, style)).collect() };
    let matrix_text = |m: &crate::polymat::PolyMatrix| format!("{}\n", m.to_string_with(style));

    let output = match cmd {
        Command::Reduce(_) => {
            let r = spec.reduced()?;
            if structured {
                Output::Structured(json!({ "gpm": matrix_json(r.gpm(), style), "dimension": r.dimension() }))
            } else {
                Output::Text(matrix_text(r.gpm()))
            }
        }
        Command::Identical(_) => {
            let a = spec.identical_matrix();
            if structured {
                Output::Structured(json!({ "identical": matrix_json(a, style) }))
            } else {
                Output::Text(matrix_text(a))
            }
        }
        Command::Dual(_) => {
            let d = dual_gpm(&spec, c.kappa)?;
            if structured {
                Output::Structured(json!({
                    "kappa": c.kappa,
                    "reduced_input": d.reduced_input,
                    "dual_gpm": matrix_json(d.euclidean.gpm(), style),
                    "dual_lambdas": lambdas(d.euclidean.lambdas()),
                    "galois_dual_gpm": matrix_json(d.galois.gpm(), style),
                    "galois_dual_lambdas": lambdas(d.galois.lambdas()),
                    "dual_dimension": d.galois.dimension(),
                }))
            } else {
                Output::Text(format!(
                    "H (shift constants {}):\n{}H_{} (shift constants {}):\n{}",
                    lambdas(d.euclidean.lambdas()).join(", "),
                    matrix_text(d.euclidean.gpm()),
                    c.kappa,
                    lambdas(d.galois.lambdas()).join(", "),
                    matrix_text(d.galois.gpm()),
                ))
            }
        }
        Command::Hull(_) => {
            let r = classify(&spec, c.kappa, policy)?;
            if structured {
                Output::Structured(r.to_json(style))
            } else {
                Output::Text(r.to_text(style))
            }
        }
        Command::Classify(_) => {
            let r = classify(&spec, c.kappa, policy)?;
            if structured {
                Output::Structured(json!({
                    "classification": r.to_json(style)["classification"],
                    "dim_code": r.dim_code,
                    "dim_qg": r.dim_qg,
                    "dim_hull": r.dim_hull,
                }))
            } else {
                Output::Text(format!(
                    "{}\ndim_code = {}\ndim_hull = {}\n",
                    r.classification.label(),
                    r.dim_code,
                    r.dim_hull
                ))
            }
        }
        Command::Expand { basis, .. } => {
            let m = if *basis { spec.expand_basis() } else { spec.expand_generator() };
            if structured {
                let rows: Vec<Vec<String>> =
                    m.row_vecs().iter().map(|r| r.iter().map(|&x| f.format(x, style)).collect()).collect();
                Output::Structured(json!({ "rows": m.rows(), "cols": m.cols(), "matrix": rows }))
            } else {
                Output::Text(format!("{}\n", m.to_string_with(style)))
            }
        }
        Command::Mindist(_) => {
            let d = min_distance(&spec.expand_basis(), c.budget as u128)?;
            let (n, k) = (spec.length(), spec.dimension());
            if structured {
                Output::Structured(json!({ "length": n, "dimension": k, "min_distance": d }))
            } else {
                Output::Text(format!("n = {n}\nk = {k}\nd_min = {d}\n"))
            }
        }
        Command::OracleCheck(_) => {
            let (_, checks) = run_checks(&spec, c.kappa, policy)?;
            let code = if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_CHECK_FAILED };
            let output = if structured {
                let list: Vec<Value> = checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect();
                Output::Structured(json!({ "checks": list }))
            } else {
                let mut s = String::new();
                for ch in &checks {
                    s.push_str(&format!("{} {}\n", if ch.passed { "PASS" } else { "FAIL" }, ch.name));
                }
                Output::Text(s)
            };
            return Ok((output, code));
        }
    };
    Ok((output, EXIT_OK))
}
