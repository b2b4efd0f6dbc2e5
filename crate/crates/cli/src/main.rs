//! `qfock`: verification suites for the Fock representations of q(n+1).

mod check_algebra;
mod lemma3;
mod q2;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "qfock", version, about = "Exact checks for Fock representations of the Lie superalgebra q(n+1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Superbracket axioms, defining representation and Q-statistics.
    CheckAlgebra(check_algebra::Args),
    /// Dimension, decomposition, character and Gram positivity of V_p.
    Report(report::Args),
    /// Determinant, rank and inverse identities of the matrix A(s; t).
    Lemma3(lemma3::Args),
    /// The q(2) module: closed forms, primitive vector, orthonormal basis.
    Q2(q2::Args),
}

pub trait Outcome: Serialize {
    fn passed(&self) -> bool;
    fn text(&self) -> String;
}

pub struct UsageError(pub String);

fn emit<T: Outcome>(result: Result<T, UsageError>, format: Format) -> ExitCode {
    let report = match result {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match format {
        Format::Text => report.text(),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
    };
    let _ = std::io::stdout().write_all(body.as_bytes());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::CheckAlgebra(a) => emit(check_algebra::run(&a), cli.format),
        Command::Report(a) => emit(report::run(&a), cli.format),
        Command::Lemma3(a) => emit(lemma3::run(&a), cli.format),
        Command::Q2(a) => emit(q2::run(&a), cli.format),
    }
}
