//! `spgauge`: order and classification queries over the exact core.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

pub mod commands;
pub mod output;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use spgauge_core::{BigInt, ChMode, Error};

pub use output::{CommandResult, Outcome, OutputFormat, Tsv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spgauge",
    version,
    about = "Exact order computations for Sp(n)-gauge groups over S^4m"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// How Chern character coefficients are evaluated.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Closed)]
    pub mode: ModeArg,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Closed,
    Convolution,
    Paper,
}

impl From<ModeArg> for ChMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Closed => ChMode::ClosedForm,
            ModeArg::Convolution => ChMode::Convolution,
            ModeArg::Paper => ChMode::PaperLiteral,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order of a cyclic group computed from generator images.
    Order {
        #[arg(value_enum)]
        kind: OrderKind,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: u32,
    },
    /// Gauge-group classification invariants.
    Gauge {
        #[arg(value_enum)]
        sub: GaugeSub,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true)]
        kprime: Option<BigInt>,
    },
    /// One row per (m, n) cell with m < n.
    Table {
        /// `A`, `A..B` or `A..=B` (both ends inclusive).
        #[arg(long, value_parser = parse_range)]
        m: (u32, u32),
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
        #[arg(long, value_enum, value_delimiter = ',')]
        columns: Vec<Column>,
    },
    /// Recompute every printed order and list arithmetic discrepancies.
    Verify {
        #[arg(long)]
        max_n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    Samelson,
    MappingGroup,
    Q2Group,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GaugeSub {
    Invariant,
    Compare,
    Classes,
    Modulus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Column {
    Samelson,
    Modulus,
    Classes,
    Branch,
}

impl Column {
    pub const ALL: [Column; 4] = [
        Column::Samelson,
        Column::Modulus,
        Column::Classes,
        Column::Branch,
    ];

    pub fn header(self) -> &'static str {
        match self {
            Column::Samelson => "samelson_order",
            Column::Modulus => "modulus",
            Column::Classes => "classes",
            Column::Branch => "branch",
        }
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse = |v: &str| v.trim().parse::<u32>().map_err(|e| format!("'{v}': {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    Ok((lo, hi))
}

/// Usage errors exit 2; anything else that goes wrong exits 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::PaperSumUndefined { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failed(other.to_string()),
        }
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Invocation {
                stdout,
                stderr,
                exit_code: code,
            };
        }
    };
    match commands::execute(&cli) {
        Ok(outcome) => Invocation {
            stdout: outcome.render(cli.format),
            stderr: String::new(),
            exit_code: outcome.exit_code,
        },
        Err(CliError::Usage(msg)) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            exit_code: EXIT_USAGE,
        },
        Err(CliError::Failed(msg)) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            exit_code: EXIT_VERIFY_FAILED,
        },
    }
}
