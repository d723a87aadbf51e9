//! `ncpit`: identity testing for noncommutative circuits from the command
//! line.
//!
//! Exit status: 0 for a Zero verdict or success, 1 for Nonzero (or a failed
//! verification), 2 for usage errors, 3 for I/O errors, 4 for parse errors,
//! 5 when the method is inapplicable or a resource cap is hit.

mod bench;
mod commands;
mod error;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ncpit", version, about = "Randomized identity testing for sparse noncommutative polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a circuit computes the zero polynomial.
    Test(TestArgs),
    /// Expand a circuit into an explicit polynomial.
    Expand(ExpandArgs),
    /// Evaluate a polynomial at the symbolic automaton matrices and check the
    /// isolated coefficient.
    Verify(PolyArgs),
    /// Compute an isolating index set for the top-degree words of a polynomial.
    Isolate(PolyArgs),
    /// Generate circuits.
    Gen(GenArgs),
    /// Run both methods on every circuit in a directory.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
pub struct RunArgs {
    /// log2 of an upper bound on the number of monomials.
    #[arg(long = "log2-sparsity", value_name = "K")]
    pub log2_sparsity: Option<usize>,
    /// log2 of an upper bound on the degree after the bivariate encoding.
    #[arg(long = "degree-log2", value_name = "B")]
    pub degree_log2: Option<u32>,
    /// Target probability of a wrong Zero verdict.
    #[arg(long = "error", value_name = "EPS", default_value_t = ncpit::pit::DEFAULT_TARGET_ERROR)]
    pub error: f64,
    /// Trials per matrix dimension; derived from --error when absent.
    #[arg(long, value_name = "R")]
    pub trials: Option<u32>,
    /// Master seed; drawn at random and printed when absent.
    #[arg(long, value_name = "S")]
    pub seed: Option<u64>,
    /// Prime modulus; chosen from the degree bound and --error when absent.
    #[arg(long, value_name = "P")]
    pub modulus: Option<String>,
    /// Largest matrix dimension the baseline may use.
    #[arg(long = "dim-cap", value_name = "D", default_value_t = ncpit::pit::DEFAULT_DIM_CAP)]
    pub dim_cap: usize,
    /// Worker threads; defaults to $NCPIT_THREADS or 1.
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Args)]
pub struct TestArgs {
    #[arg(long, value_name = "FILE")]
    pub circuit: PathBuf,
    #[command(flatten)]
    pub run: RunArgs,
    /// Registered method name.
    #[arg(long, default_value = "nfa")]
    pub method: String,
    /// Emit json-lines instead of a report.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct ExpandArgs {
    #[arg(long, value_name = "FILE")]
    pub circuit: PathBuf,
    /// Abort once an intermediate polynomial has more terms than this.
    #[arg(long, default_value_t = ncpit::circuit::DEFAULT_TERM_CAP)]
    pub cap: usize,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct PolyArgs {
    #[arg(long, value_name = "FILE")]
    pub poly: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Random sparse polynomial as a sum of products.
    Random,
    /// Random circuit computing zero.
    Zero,
    /// z1^(2^s) + ... + zn^(2^s) by repeated squaring.
    PowerSum,
    /// (z1 + z2)^(2^s) by repeated squaring.
    Binomial,
    /// z1 z2 - z2 z1.
    Commutator,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GenKind,
    /// Output g - g instead of g.
    #[arg(long)]
    pub difference: bool,
    #[arg(long, default_value_t = 2)]
    pub vars: u32,
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    #[arg(long, default_value_t = 4)]
    pub terms: usize,
    /// Gate budget for --kind zero.
    #[arg(long, default_value_t = 40)]
    pub size: usize,
    /// Squaring stages for --kind power-sum and binomial.
    #[arg(long, default_value_t = 10)]
    pub stages: u32,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Coefficients of --kind random are drawn below this prime.
    #[arg(long, value_name = "P")]
    pub modulus: Option<String>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Also write the expected polynomial (--kind random only).
    #[arg(long = "poly-out", value_name = "FILE")]
    pub poly_out: Option<PathBuf>,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Directory of `.circ` files.
    #[arg(long, value_name = "DIR")]
    pub corpus: PathBuf,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long)]
    pub json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Test(a) => commands::test(&a),
        Command::Expand(a) => commands::expand(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Isolate(a) => commands::isolate(&a),
        Command::Gen(a) => commands::gen(&a),
        Command::Bench(a) => bench::bench(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
