//! Command-line front end: tables of numbers, polynomial expansion,
//! evaluation, and verification runs.

use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use norlund::ring::parse_rational;
use norlund::{Family, MultiIndex, Rational, Tables, DEFAULT_ORDER};

pub mod commands;
pub mod document;
pub mod render;

pub use commands::{Suite, VerifyArgs};
pub use document::{OutputDocument, Payload, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Parser, Debug)]
#[command(
    name = "norlund",
    version,
    about = "Multivariate Bernoulli and Euler numbers and polynomials of any order"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Truncation order N of every series.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub max_order: usize,
    /// Omit the generation time and all wall-clock measurements.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of B_v or E_v for every |v| up to a degree.
    Numbers {
        #[arg(long)]
        family: Family,
        #[arg(long, short = 'd', default_value_t = 1)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
        /// Rational order `p/q`, or `symbolic`.
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        t: document::Order,
    },
    /// Expand one polynomial.
    Poly {
        #[arg(long)]
        family: Family,
        /// Multi-index such as `2,1,0`.
        #[arg(long)]
        v: MultiIndex,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        t: document::Order,
    },
    /// Evaluate one polynomial at a rational point.
    Eval {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        v: MultiIndex,
        /// Point such as `1/2,1`.
        #[arg(long, value_parser = parse_point_arg, allow_hyphen_values = true)]
        x: PointArg,
        #[arg(long, value_parser = parse_rational_arg, default_value = "1", allow_hyphen_values = true)]
        t: Rational,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
        #[arg(long, short = 'd', default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Multiplier on the standard error in the Monte Carlo bound.
        #[arg(long, default_value_t = 4.0)]
        confidence: f64,
    },
}

#[derive(Clone, Debug)]
pub struct PointArg(pub Vec<Rational>);

fn parse_point_arg(s: &str) -> Result<PointArg, norlund::Error> {
    commands::parse_point(s).map(PointArg)
}

fn parse_rational_arg(s: &str) -> Result<Rational, norlund::Error> {
    parse_rational(s)
}

/// Everything one invocation writes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Runs one command line (including the program name) without touching
/// the process streams.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    if cli.max_order == 0 {
        return Outcome::usage("error: --max-order must be at least 1\n".into());
    }
    let tables = Tables::new(cli.max_order);
    let result = match &cli.command {
        Command::Numbers {
            family,
            dim,
            max_deg,
            t,
        } => commands::cmd_numbers(&tables, *family, *dim, *max_deg, t),
        Command::Poly { family, v, t } => commands::cmd_poly(&tables, *family, v, t),
        Command::Eval { family, v, x, t } => commands::cmd_eval(&tables, *family, v, &x.0, t),
        Command::Verify {
            suite,
            max_deg,
            dim,
            samples,
            seed,
            shards,
            confidence,
        } => commands::cmd_verify(
            &tables,
            &VerifyArgs {
                suite: *suite,
                max_deg: *max_deg,
                dim: *dim,
                samples: *samples,
                seed: *seed,
                shards: *shards,
                confidence: *confidence,
            },
        ),
    };
    let mut doc = match result {
        Ok(doc) => doc,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    doc.command
        .args
        .insert("max_order".into(), cli.max_order.to_string());
    if cli.no_timestamp {
        if let Payload::Reports(c) = &mut doc.payload {
            c.reports.iter_mut().for_each(|r| r.strip_timings());
        }
    } else {
        doc.generated_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }
    let code = match &doc.payload {
        Payload::Reports(c) if !c.all_passed => EXIT_VERIFY_FAILED,
        _ => EXIT_OK,
    };
    let stdout = match cli.format {
        Format::Json => doc.to_json(),
        Format::Csv => render::to_csv(&doc),
        Format::Latex => render::to_latex(&doc),
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
