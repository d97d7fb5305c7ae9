//! Command-line surface: argument and config handling, the subcommands and
//! the batch verification harness.

pub mod acceptance;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use error::CliError;
pub use report::{CheckRecord, CheckStatus, Format, Report};

/// Seed used for the property suites when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_0007;

#[derive(Debug, Parser)]
#[command(name = "gqe-cli", version, about = "Exact computations with colourings, GQE equations and deformed modules")]
pub struct Cli {
    /// Truncation order in h.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Truncation order in h' (defaults to --order).
    #[arg(long, global = true)]
    pub order_hp: Option<usize>,
    /// Largest GQE entry index tried by the solver.
    #[arg(long, global = true)]
    pub pmax: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for the property suites, recorded in every report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// `key = value` file supplying defaults for the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the GQE equation for (psi, psi2) in degree -1 or 0.
    Solve {
        /// Colouring, or a config file naming one.
        #[arg(long)]
        psi: Option<String>,
        #[arg(long)]
        psi2: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        degree: Option<i64>,
    },
    /// Decide the four h-admissibility axioms.
    Axioms {
        #[arg(long)]
        psi: Option<String>,
    },
    /// h-admissible expansion of a field-valued colouring.
    Expand {
        #[arg(long)]
        psi: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// The sl2 module L(n, psi) and its relation checks.
    Rep {
        #[arg(long)]
        psi: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Character of an irreducible module by Freudenthal's recursion.
    Char {
        /// Cartan type such as A2, B2 or B2xA1.
        #[arg(long = "type")]
        cartan: Option<String>,
        /// Dominant weight in fundamental-weight coordinates, e.g. 1,0.
        #[arg(long, allow_negative_numbers = true)]
        weight: Option<String>,
    },
    /// Langlands dual character of an irreducible and its decomposition.
    DualChar {
        #[arg(long = "type")]
        cartan: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        weight: Option<String>,
    },
    /// Identities of the Langlands-interpolating algebra.
    Liq {
        #[command(subcommand)]
        action: LiqAction,
    },
    /// Root-lattice lemmas on finite types, under every relabelling.
    Rootcombi {
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Run the full acceptance suite.
    VerifyAll,
}

#[derive(Debug, Subcommand)]
pub enum LiqAction {
    /// Run the identity suite for one (g, n).
    Check {
        #[arg(long)]
        g: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
    },
}

/// What a run writes and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
/// Exit status: 0 when every check passes, 1 when one fails, 2 on
/// malformed input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match commands::execute(&cli) {
        Ok((report, format)) => {
            let text = report.render(format);
            let code = report.exit_code();
            match &cli.out {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { stdout: String::new(), stderr: String::new(), code },
                    Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {}\n", e), code: 2 },
                },
                None => Outcome { stdout: text, stderr: String::new(), code },
            }
        }
        Err(e) => {
            let code = match e {
                CliError::Usage(_) | CliError::Config { .. } | CliError::Io(_) => 2,
                _ => 1,
            };
            Outcome { stdout: String::new(), stderr: format!("error: {}\n", e), code }
        }
    }
}
