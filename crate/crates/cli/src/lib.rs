//! The `hookgrowth` command line: exact degrees, certificates, cell-typing
//! dumps, family sweeps and the oracle suites.
//!
//! Exit codes: 0 on PASS, 2 on FAIL or MARGINAL, 3 when a hypothesis is
//! violated and 1 for usage, parse and internal errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookgrowth::certify::{cell_typing, BoundCertificate, BoundName, Certifier, Epsilon, Verdict};
use hookgrowth::{degree, log_degree, Partition, Rational};

pub mod oracle;
pub mod report;
pub mod sweep;

pub use report::{GrowthReport, GrowthRow};
pub use sweep::{Family, SweepArgs};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

/// Overrides the exact-mode bit budget when set.
pub const BITS_ENV: &str = "HOOKGROWTH_EXACT_BITS";

#[derive(Debug, Parser)]
#[command(
    name = "hookgrowth",
    version,
    about = "Character degrees of symmetric groups and their exponential lower bounds"
)]
pub struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact degree f^λ and ln f^λ.
    Degree {
        /// Comma-separated parts, e.g. 4,2,1
        partition: Partition,
    },
    /// Check one bound and print its certificate as JSON.
    Certify(CertifyArgs),
    /// Dump the four-way cell typing of a shape.
    Typing(TypingArgs),
    /// Certify the theorem bound over a family of shapes.
    Sweep(SweepArgs),
    /// Run the classical identity suites.
    Oracle {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// strip, rectangle, overexponential, strict, general or theorem
    pub bound: BoundName,
    pub partition: Option<Partition>,
    #[arg(long)]
    pub alpha: Option<Rational>,
    #[arg(long)]
    pub beta: Option<Rational>,
    #[arg(long)]
    pub eps: Option<Rational>,
    #[arg(long)]
    pub gamma: Option<Rational>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Rows of the rectangle.
    #[arg(long)]
    pub a: Option<usize>,
    /// Columns of the rectangle.
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypingFormat {
    Grid,
    Json,
}

#[derive(Debug, Args)]
pub struct TypingArgs {
    pub partition: Partition,
    #[arg(long)]
    pub alpha: Rational,
    #[arg(long, value_enum, default_value = "grid")]
    pub format: TypingFormat,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(hookgrowth::Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_hypothesis() => EXIT_HYPOTHESIS,
            _ => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<hookgrowth::Error> for CliError {
    fn from(e: hookgrowth::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn verdict_exit_code(verdict: Verdict) -> i32 {
    if verdict.is_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// The certifier, with the bit budget taken from the environment if set.
pub fn certifier_from_env() -> Result<Certifier, CliError> {
    match std::env::var(BITS_ENV) {
        Ok(v) => v.trim().parse().map(Certifier::with_budget).map_err(|_| {
            usage(format!(
                "{BITS_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(Certifier::default()),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            }
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            let code = dispatch(&cli.command, &mut w, err)?;
            w.flush()?;
            Ok(code)
        }),
        None => dispatch(&cli.command, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_USAGE,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Degree { partition } => {
            writeln!(out, "{}", degree(partition))?;
            writeln!(out, "{}", report::sci(log_degree(partition)))?;
            Ok(EXIT_PASS)
        }
        Command::Certify(args) => {
            let cert = certify(args, &certifier_from_env()?)?;
            writeln!(out, "{}", cert.to_json())?;
            Ok(verdict_exit_code(cert.verdict))
        }
        Command::Typing(args) => {
            let typing = cell_typing(&args.partition, &args.alpha)?;
            typing.verify()?;
            match args.format {
                TypingFormat::Grid => write!(out, "{}", typing.grid())?,
                TypingFormat::Json => writeln!(out, "{}", typing.to_json())?,
            }
            Ok(EXIT_PASS)
        }
        Command::Sweep(args) => {
            let report = sweep::run_sweep(args, &certifier_from_env()?)?;
            report.write(args.format, out, err)?;
            Ok(report.exit_code())
        }
        Command::Oracle { max_n } => {
            let outcomes = oracle::run_oracles(*max_n)?;
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            let ok = outcomes.iter().all(|o| o.failures.is_empty());
            Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

/// Builds the certificate named in `args`, rejecting flags the bound does
/// not take.
pub fn certify(args: &CertifyArgs, certifier: &Certifier) -> Result<BoundCertificate, CliError> {
    let bound = args.bound.as_str();
    let given = [
        ("--alpha", args.alpha.is_some()),
        ("--beta", args.beta.is_some()),
        ("--eps", args.eps.is_some()),
        ("--gamma", args.gamma.is_some()),
        ("--k", args.k.is_some()),
        ("--l", args.l.is_some()),
        ("--a", args.a.is_some()),
        ("--b", args.b.is_some()),
    ];
    let allowed: &[&str] = match args.bound {
        BoundName::Strip => &["--alpha", "--k", "--l"],
        BoundName::Rectangle => &["--a", "--b"],
        BoundName::Overexponential => &["--eps", "--gamma"],
        BoundName::Strict | BoundName::General => &["--alpha"],
        BoundName::Theorem => &["--alpha", "--beta"],
    };
    for (flag, present) in given {
        if present && !allowed.contains(&flag) {
            return Err(usage(format!("{flag} does not apply to the {bound} bound")));
        }
    }
    fn need<T: Clone>(value: &Option<T>, flag: &str, bound: &str) -> Result<T, CliError> {
        value
            .clone()
            .ok_or_else(|| usage(format!("the {bound} bound needs {flag}")))
    }
    let partition = || need(&args.partition, "a partition", bound);
    let alpha = || need(&args.alpha, "--alpha", bound);
    let c = certifier;
    let cert = match args.bound {
        BoundName::Strip => {
            let (k, l) = (need(&args.k, "--k", bound)?, need(&args.l, "--l", bound)?);
            c.strip_bound(&partition()?, k, l, &alpha()?)?.certificate
        }
        BoundName::Rectangle => {
            if args.partition.is_some() {
                return Err(usage(
                    "the rectangle bound takes --a and --b, not a partition",
                ));
            }
            c.rectangle_bound(need(&args.a, "--a", bound)?, need(&args.b, "--b", bound)?)?
        }
        BoundName::Overexponential => {
            let eps = Epsilon::Exact(need(&args.eps, "--eps", bound)?);
            c.overexponential_bound(&partition()?, &eps, &need(&args.gamma, "--gamma", bound)?)?
        }
        BoundName::Strict => c.strict_bound(&partition()?, &alpha()?)?,
        BoundName::General => c.general_bound(&partition()?, &alpha()?)?,
        BoundName::Theorem => c.theorem_classify(
            &partition()?,
            &alpha()?,
            &need(&args.beta, "--beta", bound)?,
        )?,
    };
    Ok(cert)
}
