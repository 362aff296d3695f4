//! `hypseries` command-line front end.
//!
//! Exit status: 0 on success, 1 when any verification reports FAIL,
//! 2 on usage, domain or convergence errors.

mod commands;
mod render;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] hypseries::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered output plus whether any check in it failed.
pub struct Outcome {
    pub body: String,
    pub failed: bool,
}

impl Outcome {
    pub fn ok(body: String) -> Self {
        Self { body, failed: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Target precision in bits.
    #[arg(long, default_value_t = 128, global = true)]
    pub prec: usize,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "hypseries", version, about = "Hyperbolic and Lambert series: exact tables, evaluation, verification")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFamily {
    /// B_{2m+2}(phi) of the functional equation.
    #[value(name = "calB")]
    CalB,
    /// The same polynomial from the small-phi asymptotics.
    #[value(name = "calA")]
    CalA,
    /// The same polynomial from the residue expansion.
    #[value(name = "calB-residue")]
    CalBResidue,
    /// Ramanujan polynomial R_{2m+2}(phi).
    #[value(name = "ramanujan")]
    Ramanujan,
    /// Generalized Ramanujan polynomial R^{(s,r)}_{2m+2}(phi).
    #[value(name = "gen-ramanujan")]
    GenRamanujan,
    /// Inversion numbers for row --i.
    #[value(name = "frak-b")]
    FrakB,
    /// Transformation polynomials S_i^{(m)}(phi).
    #[value(name = "calS")]
    CalS,
    /// Truncated small-phi expansion of the sinh-weighted series.
    #[value(name = "a-sinh")]
    ASinh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoeffArg {
    C,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BernoulliKind {
    /// B_0 .. B_n.
    Numbers,
    /// The Bernoulli polynomial B_n(x).
    Poly,
    /// The generalized polynomial B_n^{(order)}(x).
    Gen,
    /// B_k^{(2m+2)}(m+1) for k = 0..n.
    ReducedEven,
    /// B_k^{(2m+1)}(m) for k = 0..n.
    ReducedOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    #[value(name = "S")]
    S,
    #[value(name = "S-cosh")]
    SCosh,
    #[value(name = "S-sinh")]
    SSinh,
    #[value(name = "S-exp")]
    SExp,
    #[value(name = "S-sinh-exp")]
    SSinhExp,
    #[value(name = "S-via-lambert")]
    SViaLambert,
    #[value(name = "S-sinh-via-lambert")]
    SSinhViaLambert,
    #[value(name = "lambert")]
    Lambert,
    #[value(name = "qpolygamma")]
    QPolygamma,
    #[value(name = "zeta")]
    Zeta,
    #[value(name = "euler-gamma")]
    EulerGamma,
    #[value(name = "calB")]
    CalB,
    #[value(name = "a-sinh")]
    ASinh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Cosh,
    SinhEven,
    SinhOdd,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact polynomial families with symbolic pi.
    Poly {
        #[arg(value_enum)]
        family: PolyFamily,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        #[arg(long = "k-trunc", default_value_t = 1)]
        k_trunc: usize,
    },
    /// Coefficient tables c_{2i+1}^{(m)} and d_{2i}^{(m)}.
    Coeffs {
        #[arg(value_enum)]
        kind: CoeffArg,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// A route name or `all`.
        #[arg(long, default_value = "binomial-expansion")]
        route: String,
    },
    /// Bernoulli numbers and polynomials.
    Bernoulli {
        #[arg(value_enum)]
        kind: BernoulliKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Numeric evaluation of a series or constant.
    Eval {
        #[arg(value_enum)]
        series: SeriesKind,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        gamma: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        s: i64,
        /// Complex argument `re[,im]`; a component may carry a `pi` suffix.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        phi: String,
        #[arg(long = "k-trunc", default_value_t = 1)]
        k_trunc: usize,
    },
    /// Identity suite and numeric relation checks.
    Verify {
        /// A relation id, `identities` or `all`.
        target: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "m-max")]
        m_max: Option<usize>,
        /// Point to check at; a fixed grid is used when omitted.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long)]
        gamma: Option<usize>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long = "k-trunc")]
        k_trunc: Option<usize>,
    },
    /// Zeros of B_{2m+2} in the phi plane.
    Zeros {
        #[arg(long, conflicts_with = "m_max")]
        m: Option<usize>,
        #[arg(long = "m-max")]
        m_max: Option<usize>,
    },
}

fn emit(common: &Common, body: &str) -> CliResult<()> {
    match &common.out {
        Some(path) => std::fs::write(path, body)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.prec < 16 {
        eprintln!("error: --prec must be at least 16");
        return ExitCode::from(2);
    }
    let result = commands::run(&cli.cmd, &cli.common).and_then(|o| {
        emit(&cli.common, &o.body)?;
        Ok(o.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
