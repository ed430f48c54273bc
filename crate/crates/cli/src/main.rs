//! `higher-specht`: command-line front end for the higher Specht toolkit.
//!
//! Exit status is 0 when every check passes, 1 when a mathematical check
//! fails, and 2 for usage or I/O errors.

mod commands;
mod family;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{FrobeniusArgs, Sink, SpechtArgs, SweepArgs, TransitionArgs, VerifyArgs};
use family::FamilyArgs;
use render::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] higher_specht::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            // Exact linear algebra found no solution where theory promises one.
            CliError::Core(higher_specht::Error::Inconsistent(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "higher-specht",
    version,
    about = "Higher Specht polynomials and coinvariant-type quotients"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a higher Specht family descends to a basis of its quotient.
    Verify(VerifyArgs),
    /// Graded Frobenius character of a quotient.
    Frobenius(FrobeniusArgs),
    /// Transition matrix between the two bases of R_μ in one degree.
    Transition(TransitionArgs),
    /// Run many verify (or character) checks in parallel.
    Sweep(SweepArgs),
    /// Hilbert series of a quotient.
    Hilbert(FamilyArgs),
    /// Print a single higher Specht polynomial F_T^S.
    SpechtEval(SpechtArgs),
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let sink = Sink {
        format: cli.format,
        output: cli.output.clone(),
    };
    match &cli.command {
        Command::Verify(a) => commands::verify(a, &sink),
        Command::Frobenius(a) => commands::frobenius(a, &sink),
        Command::Transition(a) => commands::transition(a, &sink),
        Command::Sweep(a) => commands::sweep(a, &sink),
        Command::Hilbert(a) => commands::hilbert(a, &sink),
        Command::SpechtEval(a) => commands::specht_eval(a, &sink),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
