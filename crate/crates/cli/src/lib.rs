//! `lefschetz` command-line tool.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! what should go to stdout and stderr, so tests can drive the tool without
//! spawning a process.

mod cache;
mod commands;
pub mod report;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::Report;

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "LEFSCHETZ_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Torsion exponents, exceptional sets and their oracles"
)]
pub struct Cli {
    /// Render the report as plain-text tables instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact γ of a product of simple factors.
    Gamma(GammaArgs),
    /// Which sufficient criterion (if any) proves a product is fully of Lefschetz type.
    CheckLefschetz(InputArgs),
    /// Enumerate an exceptional set or test membership.
    Sets(SetsArgs),
    /// Minuscule table lookups and the generated exclusion dimensions.
    Minuscule(MinusculeArgs),
    /// Stabilizer dimensions and toy-scale point counts.
    Stabilizer(StabilizerArgs),
    /// The filtration ratio ψ or its maximum.
    Psi(PsiArgs),
    /// Largest prefix ratio of two weight sequences.
    PrefixMax(PrefixMaxArgs),
    /// Structural parts of the degree lower bound for a point of order m.
    DegreeBound(DegreeBoundArgs),
    /// Run the whole oracle suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Product as JSON, from a file or `-` for stdin.
    #[arg(long)]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// List the fraction of every subset.
    #[arg(long)]
    pub audit: bool,
    /// Refuse products with more factors than this.
    #[arg(long, default_value_t = lefschetz_core::gamma::DEFAULT_MAX_FACTORS)]
    pub max_factors: usize,
}

#[derive(Debug, Args)]
pub struct SetsArgs {
    /// sigma, sigma-prime or odd-exclusion.
    #[arg(long)]
    pub set: String,
    /// Enumerate elements up to this bound.
    #[arg(long, required_unless_present = "test")]
    pub bound: Option<u64>,
    /// Test a single value instead of enumerating.
    #[arg(long, conflicts_with_all = ["bound", "doubled", "cache"])]
    pub test: Option<u64>,
    /// Enumerate {2h : h in the set, 2h ≤ bound} (sigma-prime only).
    #[arg(long)]
    pub doubled: bool,
    /// Read the enumeration from this file if it matches, else write it there.
    #[arg(long)]
    pub cache: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PolicyArg {
    StandardRow,
    StandardOnly,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["lookup", "exclusions"]))]
pub struct MinusculeArgs {
    /// `TYPE,RANK,WEIGHT`, for example `D,5,1`.
    #[arg(long)]
    pub lookup: Option<String>,
    /// Admissible tensor-power dimensions up to this bound.
    #[arg(long)]
    pub exclusions: Option<u64>,
    #[arg(long, value_enum, default_value = "standard-row")]
    pub policy: PolicyArg,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["verify_dims", "point_count"]))]
pub struct StabilizerArgs {
    /// Compare the nullspace oracle with the dimension formula.
    #[arg(long)]
    pub verify_dims: bool,
    /// Even dimensions to test.
    #[arg(long, value_delimiter = ',', default_value = "2,4,6,8")]
    pub ns: Vec<usize>,
    /// Random subspaces per (n, kind, dimension).
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    /// Work over the rationals instead of F_10007.
    #[arg(long)]
    pub rational: bool,
    /// Count points in SL2(Z/ell^level).
    #[arg(long)]
    pub point_count: bool,
    #[arg(long, default_value_t = 5)]
    pub ell: u64,
    #[arg(long, default_value_t = 1)]
    pub level: u32,
    /// Filtration ranks; every toy filtration when omitted.
    #[arg(long, value_delimiter = ',', requires = "exponents")]
    pub ranks: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',', requires = "ranks")]
    pub exponents: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RegimeArg {
    Isotropic,
    Full,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["ranks", "max"]))]
pub struct PsiArgs {
    #[arg(long)]
    pub h: u64,
    /// Residue degrees, summing to e.
    #[arg(long, value_delimiter = ',')]
    pub f: Vec<u64>,
    /// One rank per residue degree.
    #[arg(long, value_delimiter = ',')]
    pub ranks: Option<Vec<u64>>,
    #[arg(long, default_value_t = 0)]
    pub delta: u8,
    /// Closed-form maximum over the regime instead of a single value.
    #[arg(long, value_enum)]
    pub max: Option<RegimeArg>,
}

#[derive(Debug, Args)]
pub struct PrefixMaxArgs {
    /// Numerator weights, integers or fractions.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Vec<String>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["m", "asymptotic"]))]
pub struct DegreeBoundArgs {
    #[arg(long, requires = "h")]
    pub m: Option<u64>,
    #[arg(long)]
    pub h: Option<u64>,
    /// Largest ω(m)·log log m / log m for 3 ≤ m ≤ N.
    #[arg(long)]
    pub asymptotic: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Smaller samples; every exact comparison still runs.
    #[arg(long)]
    pub quick: bool,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    /// Run only these criteria (1-10).
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=10))]
    pub only: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// A subcommand either produces a report (possibly flagged as failed) or
/// rejects its input.
pub(crate) enum CommandError {
    Input(String),
}

impl From<lefschetz_core::Error> for CommandError {
    fn from(e: lefschetz_core::Error) -> Self {
        CommandError::Input(e.to_string())
    }
}

pub(crate) struct CommandOutput {
    pub report: Report,
    pub failed: bool,
}

fn workers() -> Result<Option<usize>, String> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(format!("{WORKERS_ENV} must be a positive integer, got {s:?}")),
        },
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let pool = match workers() {
        Ok(n) => {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(n) = n {
                builder = builder.num_threads(n);
            }
            match builder.build() {
                Ok(p) => p,
                Err(e) => return Outcome::input_error(e),
            }
        }
        Err(msg) => return Outcome::input_error(msg),
    };
    let result = pool.install(|| commands::dispatch(&cli.command));
    match result {
        Ok(out) => Outcome {
            code: if out.failed { EXIT_VERIFY_FAILED } else { EXIT_OK },
            stdout: if cli.human {
                out.report.to_human()
            } else {
                out.report.to_json() + "\n"
            },
            stderr: String::new(),
        },
        Err(CommandError::Input(msg)) => Outcome::input_error(msg),
    }
}
