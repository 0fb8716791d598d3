//! The `laplace2sq` command line.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.

mod render;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use laplace2sq_core::constructor::{construct, construct_many, smallest_with_multiplicity};
use laplace2sq_core::number_theory::factorize_big;
use laplace2sq_core::spectrum::{multiplicity_nd_with, viable_multiplicity_survey_with, SpectrumOptions};
use laplace2sq_core::sweep::{table_row, verify_value, TableRow};
use laplace2sq_core::{enumerate_reps, multiplicity_2d, split_prime, BigUint, Budget, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Overrides the default step budget of oracle scans.
pub const BUDGET_ENV: &str = "LAPLACE2SQ_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "laplace2sq",
    version,
    about = "Laplacian eigenvalue multiplicities on the square via sums of two squares"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all N = a² + b² with 0 ≤ a ≤ b
    Reps {
        n: BigUint,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiplicity of an eigenvalue on (0, π)^d
    Mult {
        n: BigUint,
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Split a prime p ≡ 1 (mod 4) as a² + b²
    Split {
        p: BigUint,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build eigenvalues with multiplicity n
    Construct {
        n: u64,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Least eigenvalue with multiplicity n, up to a bound
    Smallest {
        n: u64,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate multiplicities for 1..=max
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Cross-check every value in 1..=max against the brute-force oracles
    Verify {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Survey d-dimensional multiplicities for values outside {dk, dk+1}
    Highdim {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Verify(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(msg) => Failure::Verify(msg),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = budget_from_env().and_then(|budget| dispatch(cli.command, budget, out, err));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_VERIFY
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn budget_from_env() -> Result<Budget, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::new)
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("`{command}` does not support --format {format:?}").to_lowercase()))
    }
}

fn to_u64(n: &BigUint) -> Result<u64, Failure> {
    u64::try_from(n).map_err(|_| Failure::Domain(Error::UnsupportedWidth(n.to_string())))
}

fn dispatch(command: Command, budget: Budget, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    use Format::*;
    match command {
        Command::Reps { n, format } => {
            if n == BigUint::ZERO {
                return Err(Error::Domain("N must be positive".into()).into());
            }
            let reps = enumerate_reps(&factorize_big(&n)?);
            out.write_all(render::reps(&reps, format_kind(format)).as_bytes())?;
        }
        Command::Mult { n, dim, format } => {
            require_format(format, &[Text, Json], "mult")?;
            let report = match dim {
                0 | 1 => return Err(Failure::Usage(format!("--dim must be at least 2, got {dim}"))),
                2 => multiplicity_2d(&n)?,
                d => {
                    let opts = SpectrumOptions { budget, ..Default::default() };
                    multiplicity_nd_with(to_u64(&n)?, d, opts)?
                }
            };
            out.write_all(render::multiplicity(&report, format == Json).as_bytes())?;
        }
        Command::Split { p, format } => {
            require_format(format, &[Text, Json], "split")?;
            let p = to_u64(&p)?;
            let (a, b) = split_prime(p)?;
            out.write_all(render::split(p, a, b, format == Json).as_bytes())?;
        }
        Command::Construct { n, count, format } => {
            require_format(format, &[Text, Json], "construct")?;
            match count {
                None => out.write_all(render::recipe(&construct(n)?, format == Json).as_bytes())?,
                Some(0) => return Err(Failure::Usage("--count must be positive".into())),
                Some(c) => out.write_all(render::recipes(&construct_many(n, c)?, format == Json).as_bytes())?,
            }
        }
        Command::Smallest { n, bound, format } => {
            require_format(format, &[Text, Json], "smallest")?;
            let found = smallest_with_multiplicity(n, bound)?;
            out.write_all(render::smallest(n, bound, found, format == Json).as_bytes())?;
        }
        Command::Table { max, dim, out: path, format, jobs } => {
            require_format(format, &[Csv, Json], "table")?;
            check_dim(dim)?;
            let rows: Vec<TableRow> = run_jobs(jobs, max, |lambda| table_row(lambda, dim, budget))?;
            let text = render::table(&rows, format == Json);
            match path {
                Some(path) => write_atomically(&path, text.as_bytes())?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify { max, dim, jobs } => {
            check_dim(dim)?;
            let problems: Vec<Vec<String>> = run_jobs(jobs, max, |n| verify_value(n, dim, budget))?;
            let problems: Vec<String> = problems.into_iter().flatten().collect();
            for p in &problems {
                writeln!(err, "mismatch: {p}")?;
            }
            writeln!(out, "checked {max} integers (dim {dim}), {} mismatches", problems.len())?;
            if !problems.is_empty() {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Highdim { dim, bound, format } => {
            require_format(format, &[Text, Json], "highdim")?;
            let survey = viable_multiplicity_survey_with(dim, bound, budget)?;
            out.write_all(render::survey(&survey, format == Json).as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

fn format_kind(format: Format) -> render::Kind {
    match format {
        Format::Text => render::Kind::Text,
        Format::Json => render::Kind::Json,
        Format::Csv => render::Kind::Csv,
    }
}

fn check_dim(dim: u32) -> Result<(), Failure> {
    if dim < 2 {
        return Err(Failure::Usage(format!("--dim must be at least 2, got {dim}")));
    }
    Ok(())
}

/// Maps `work` over `1..=max` on `jobs` threads; results come back in input order.
fn run_jobs<T, F>(jobs: usize, max: u64, work: F) -> Result<Vec<T>, Failure>
where
    T: Send,
    F: Fn(u64) -> laplace2sq_core::Result<T> + Sync + Send,
{
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    if jobs == 1 {
        return (1..=max).map(&work).collect::<Result<_, _>>().map_err(Failure::from);
    }
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Failure::Io(io::Error::other(e)))?;
    pool.install(|| (1..=max).into_par_iter().map(&work).collect::<Result<_, _>>()).map_err(Failure::from)
}

/// Writes to a temporary file next to `path`, then renames it into place.
fn write_atomically(path: &Path, contents: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
