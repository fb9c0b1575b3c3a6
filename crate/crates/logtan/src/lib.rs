//! Command-line front end for `logtan-core`.
//!
//! [`run`] takes an argument list and returns the exit code together with
//! everything that would be printed, so the binary is a thin wrapper and
//! tests can drive the CLI in-process.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;
mod input;
mod render;

pub use input::{parse_delta, parse_nu, VarietySpec, MAX_RS};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Failures that stop a command; both exit with code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl From<logtan_core::Error> for CliError {
    fn from(e: logtan_core::Error) -> Self {
        CliError::Precondition(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "logtan",
    version,
    about = "Slope stability of logarithmic tangent sheaves on toric varieties of Picard rank one and two"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Debug, Args)]
pub struct VarietyArgs {
    /// Rank-two variety: `r,s`.
    #[arg(long, value_delimiter = ',', conflicts_with = "rank1")]
    rank2: Option<Vec<usize>>,
    /// Twists `a1,...,ar` for a rank-two variety.
    #[arg(long, value_delimiter = ',', requires = "rank2")]
    a: Option<Vec<u64>>,
    /// Rank-one variety: weights `q0,...,qn`.
    #[arg(long, value_delimiter = ',')]
    rank1: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    variety: VarietyArgs,
    /// Divisor as a comma list of rays (`v0..vr`, `w0..ws`, `u0..un`).
    #[arg(long, default_value = "")]
    delta: String,
    /// Polarization ratio `p/q`. Ignored (and optional) on rank one.
    #[arg(long)]
    nu: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verdict at one polarization from the candidate sub-sheaves.
    Check(PointArgs),
    /// Verdict at one polarization by exhaustive enumeration.
    Oracle(PointArgs),
    /// Stable and semistable sets of polarizations in closed form.
    Region {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long, default_value = "")]
        delta: String,
    },
    /// Rows of the decision tables over a parameter grid.
    Table {
        /// Which table: 1 (product case) or 2, 3, 4 (twisted case).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: u8,
        /// Largest r+s in the grid.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest twist in the grid.
        #[arg(long, default_value_t = 2)]
        max_a: u64,
    },
    /// Log del Pezzo pairs on the plane or a Hirzebruch surface.
    Delpezzo {
        /// `p2` or `f<r>` (for example `f1`).
        #[arg(long)]
        surface: String,
    },
    /// Point checks against the exhaustive oracle over a grid.
    Sweep {
        /// Largest r+s for rank-two varieties.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest twist.
        #[arg(long, default_value_t = 2)]
        max_a: u64,
        /// Largest dimension for rank-one varieties.
        #[arg(long, default_value_t = 3)]
        max_rank1_n: usize,
        /// Largest rank-one weight.
        #[arg(long, default_value_t = 3)]
        max_q: u64,
        /// Polarization ratios to probe.
        #[arg(long, value_delimiter = ',', default_value = "1/3,1/2,1,3/2,2,3")]
        nus: Vec<String>,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// A command's report: the `input` echo, the `result` payload, its text
/// rendering, and whether it found a mismatch.
pub(crate) struct Report {
    pub input: Value,
    pub result: Value,
    pub text: String,
    pub mismatch: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let (name, result) = match &cli.command {
        Command::Check(p) => ("check", commands::check(p, false)),
        Command::Oracle(p) => ("oracle", commands::check(p, true)),
        Command::Region { variety, delta } => ("region", commands::region(variety, delta)),
        Command::Table {
            table,
            max_n,
            max_a,
        } => ("table", commands::table(*table, *max_n, *max_a)),
        Command::Delpezzo { surface } => ("delpezzo", commands::delpezzo(surface)),
        Command::Sweep {
            max_n,
            max_a,
            max_rank1_n,
            max_q,
            nus,
        } => (
            "sweep",
            commands::sweep(*max_n, *max_a, *max_rank1_n, *max_q, nus),
        ),
    };
    match result {
        Ok(report) => {
            let code = if report.mismatch { 1 } else { 0 };
            let stdout = match cli.format {
                Format::Json => {
                    let doc = json!({
                        "command": name,
                        "input": report.input,
                        "result": report.result,
                        "version": VERSION,
                    });
                    serde_json::to_string_pretty(&doc).expect("values serialize") + "\n"
                }
                Format::Text => report.text,
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("logtan {name}: {e}\n"),
        },
    }
}
