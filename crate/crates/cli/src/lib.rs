//! Command-line frontend for `modbb`.
//!
//! Every subcommand reads one input file and writes its result to stdout,
//! either human readable or as JSON. Exit codes: 0 success, 1 usage or I/O,
//! 2 parse error, 3 mathematical precondition violated, 4 selftest failure.

mod commands;
mod render;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MATH: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "modbb", version, about = "Exact module border bases over Q[x1..xn]^r")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,

    /// Give up once the working degree exceeds this.
    #[arg(long, default_value_t = modbb::mbba::DEFAULT_MAX_DEGREE, global = true)]
    pub max_degree: u32,

    /// Check finite codimension with a Groebner basis before computing.
    #[arg(long, global = true)]
    pub preflight: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Border basis of the module generated by the `vectors:` section.
    Compute { file: PathBuf },
    /// Divide a vector by the prebasis given by `ordermodule:` and `vectors:`.
    Divide {
        file: PathBuf,
        /// The vector to divide, in the input syntax.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Decide whether the prebasis in FILE is a border basis.
    Check {
        file: PathBuf,
        /// Which characterization to test.
        #[arg(long, value_enum, default_value_t = Criterion::Neighbors)]
        criterion: Criterion,
    },
    /// Formal multiplication matrices of the prebasis in FILE.
    Multmat { file: PathBuf },
    /// Reduced Groebner basis of the module generated by `vectors:`.
    Groebner { file: PathBuf },
    /// Quotient border basis of `vectors:` modulo the module spanned by `syzygy:`.
    Quotient { file: PathBuf },
    /// Subideal border basis of `ideal:` inside the ideal generated by `subideal:`.
    Subideal { file: PathBuf },
    /// Run the built-in worked examples and seeded random consistency checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances per check.
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    /// SV-vectors of all pairs with equal components.
    AllPairs,
    /// SV-vectors of neighbor pairs.
    Neighbors,
    /// Pairwise commutativity of the multiplication matrices.
    Matrices,
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<modbb::Error> for Failure {
    fn from(e: modbb::Error) -> Self {
        let code = match e {
            modbb::Error::Parse { .. } => EXIT_PARSE,
            _ => EXIT_MATH,
        };
        Failure::new(code, e.to_string())
    }
}

/// Result of a successful command, in both output formats.
pub(crate) struct Report {
    pub pretty: String,
    pub json: serde_json::Value,
    pub code: i32,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match commands::execute(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Pretty => report.pretty,
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
                    s.push('\n');
                    s
                }
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            report.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
