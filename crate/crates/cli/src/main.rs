//! powersum: evaluate Stirling functions, classical combinatorial numbers and
//! binomial transforms, and verify the power-sum identity catalog in exact or
//! complex-float arithmetic.
//!
//! Exit codes: 0 when everything passes, 1 when a verification fails, 2 on
//! usage errors, 3 on domain or numeric errors (singular points, overflow).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use powersum_core::{ArithmeticMode, Precision};

mod eval;
mod literal;
mod render;
mod sweep;
mod transform_cmd;
mod verify_cmd;

#[derive(Parser)]
#[command(name = "powersum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity: a Stirling function or number, Eulerian
    /// coefficients, a harmonic number, or the upper summation polynomial
    Eval(EvalArgs),
    /// Check one identity (or all of them) at explicit parameters
    Verify(VerifyArgs),
    /// Run randomized float-mode verification sweeps
    Sweep(SweepArgs),
    /// Apply the binomial transform or its inverse to a sequence
    Transform(TransformArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Standard,
    Extended,
}

impl ModeArg {
    pub fn arithmetic(self) -> ArithmeticMode {
        match self {
            ModeArg::Exact => ArithmeticMode::Exact,
            ModeArg::Standard => ArithmeticMode::FloatStandard,
            ModeArg::Extended => ArithmeticMode::FloatExtended,
        }
    }

    pub fn precision(self) -> Precision {
        match self {
            ModeArg::Extended => Precision::Extended,
            _ => Precision::Standard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalTarget {
    /// S(alpha, k) for complex or integer alpha
    StirlingFunction,
    /// unsigned first-kind Stirling number c(m, k)
    Stirling1,
    /// second-kind Stirling number S(n, k)
    Stirling2,
    /// Eulerian polynomial coefficients of A_n(x)
    Eulerian,
    /// harmonic number H_k
    Harmonic,
    /// upper summation polynomial sigma(x, m, j)
    Sigma,
}

#[derive(Debug, clap::Args)]
pub struct EvalArgs {
    /// Quantity to evaluate
    target: EvalTarget,
    /// Exponent alpha: integer or complex literal (RE, RE+IMi, RE-IMi)
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    /// Weight base x: rational (p/q) or complex literal
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Standard)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Significant decimals in text output
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Identity tag (LEMMA4, EQ6, EQ8, EQ10, EQ13, EQ16, EQ17, EQ19, EQ20,
    /// EQ23, EQ24) or `all`
    target: String,
    /// Exponent alpha: integer or complex literal
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// EQ16 exponent, or the EQ19 summation limit
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    /// EQ19 exponent (a positive integer)
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Weight base x where the identity takes one
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Upper summation limit
    #[arg(long)]
    m: Option<u32>,
    /// Coefficient sequence for LEMMA4, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Standard)]
    mode: ModeArg,
    /// Pass tolerance; defaults to 0 (exact), 1e-7 (standard), 1e-10 (extended)
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// Identity tag or `all` (the complex-exponent identities)
    target: String,
    /// Number of random draws per identity
    #[arg(long, default_value_t = 100)]
    draws: u32,
    /// Upper bound on the summation limit m
    #[arg(long = "m-max", default_value_t = 12)]
    m_max: u32,
    /// Bound on |Re alpha| and |Im alpha| for drawn exponents
    #[arg(long = "alpha-bound", default_value_t = 4.0)]
    alpha_bound: f64,
    /// Bound on |x| for drawn weight bases
    #[arg(long = "x-bound", default_value_t = 2.0)]
    x_bound: f64,
    /// Pin the exponent instead of drawing it
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Pin the weight base instead of drawing it
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Seed for reproducible draws
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = ModeArg::Standard)]
    mode: ModeArg,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Debug, clap::Args)]
pub struct TransformArgs {
    /// Comma-separated sequence literal
    #[arg(long, allow_hyphen_values = true)]
    seq: String,
    /// Transform direction
    #[arg(long, value_enum)]
    dir: Direction,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Command failures carrying their exit codes. Usage problems exit 2, domain
/// and numeric errors exit 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(powersum_core::Error),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Domain(_) => ExitCode::from(3),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<powersum_core::Error> for CliError {
    fn from(e: powersum_core::Error) -> Self {
        match e {
            powersum_core::Error::InvalidParams(msg) => CliError::Usage(msg),
            other => CliError::Domain(other),
        }
    }
}

pub type CliResult = Result<ExitCode, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(args) => eval::run(args),
        Command::Verify(args) => verify_cmd::run(args),
        Command::Sweep(args) => sweep::run(args),
        Command::Transform(args) => transform_cmd::run(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{err}");
            err.exit_code()
        }
    }
}
