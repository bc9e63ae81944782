//! `debranges`: tables, evaluations, identity sweeps and Gosper's algorithm
//! from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors.

mod eval;
mod gosper;
mod render;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "debranges", version, about = "Exact checks of the Koebe Loewner chain and the de Branges functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a coefficient triangle.
    Table(table::TableArgs),
    /// Evaluate one function at a point.
    Eval(eval::EvalArgs),
    /// Run an identity sweep.
    Verify(verify::VerifyArgs),
    /// Run Gosper's algorithm on a hypergeometric term.
    Gosper(gosper::GosperArgs),
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit code 2.
    Usage(String),
    /// A verification failed; the report is already printed. Exit code 1.
    Failed,
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => table::run(&args),
        Command::Eval(args) => eval::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Gosper(args) => gosper::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
