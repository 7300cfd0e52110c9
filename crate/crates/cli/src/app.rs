//! Argument handling and command dispatch.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use gwistor::scalar::parse_rational;
use gwistor::stiefel::run_stiefel;
use gwistor::{run_verify, KMode, Scalar, Suite};

use crate::eval::Evaluator;
use crate::expr::parse;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gwistor", version, about = "Exact checks for the G2 structure on a unit tangent bundle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites.
    Verify {
        /// `symbolic` or a rational `p/q`.
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true, value_parser = parse_k_mode)]
        k: KMode,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an expression over the named forms.
    Eval {
        expr: String,
        /// A rational `p/q`; `k` stays symbolic when omitted.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Holonomy and torsion of the homogeneous model for one `l`.
    Stiefel {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
}

fn parse_k_mode(s: &str) -> Result<KMode, String> {
    s.parse().map_err(|e: gwistor::Error| format!("invalid k: {e}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
        .map_err(|e: gwistor::Error| format!("{e} (expected one of {})", Suite::NAMES.join(", ")))
}

/// What a run printed, and its exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(EXIT_PASS, text)
            };
        }
    };
    match cli.command {
        Command::Verify { k, suite, format } => {
            let report = run_verify(suite, &k);
            let code = if report.all_passed() { EXIT_PASS } else { EXIT_FAIL };
            let text = match format {
                Format::Text => format!("{report}\n"),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable report")),
            };
            Outcome::ok(code, text)
        }
        Command::Eval { expr, k } => {
            let k = match k.as_deref().map(parse_rational).transpose() {
                Ok(k) => k.map(Scalar::from_rational),
                Err(e) => return Outcome::usage(format!("error: invalid k: {e}\n")),
            };
            let (tree, grade) = match parse(&expr) {
                Ok(t) => t,
                Err(e) => return Outcome::usage(format!("error: {e}\n")),
            };
            match Evaluator::new(k).eval(&tree) {
                Ok(v) => Outcome::ok(EXIT_PASS, format!("{v}\ngrade: {grade}\n")),
                Err(e) => Outcome::usage(format!("error: {e}\n")),
            }
        }
        Command::Stiefel { l } => {
            let Ok(l) = usize::try_from(l) else {
                return Outcome::usage(format!("error: l out of range: {l} (supported 4..=9)\n"));
            };
            match run_stiefel(l) {
                Ok(s) => Outcome::ok(if s.passed() { EXIT_PASS } else { EXIT_FAIL }, format!("{s}\n")),
                Err(e) => Outcome::usage(format!("error: {e}\n")),
            }
        }
    }
}
