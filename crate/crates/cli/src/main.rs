use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::CliError;

#[derive(Parser, Debug)]
#[command(name = "liesheaf", version, about = "Exact stability checks for Lie-algebra sheaves")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file (format depends on the subcommand)
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Lie algebra file for flag commands; defaults to sl(n) by dimension
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for commands that draw a random flag when no input is given
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Integer c of the example2 bundle
    #[arg(long, global = true, allow_hyphen_values = true)]
    c: Option<i64>,

    /// Integer s of the example2 bundle
    #[arg(long, global = true, allow_hyphen_values = true)]
    s: Option<i64>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Validate a Lie algebra file
    LieCheck,
    /// Killing matrix and determinant
    Killing,
    /// Predicates and μ-weights of a flag
    FiltAnalyze,
    /// Flag → grading element → flag
    ParabRoundtrip,
    /// Gieseker, slope and tensor verdicts for a model file
    StabCheck,
    /// Harder–Narasimhan filtration of a split sheaf
    Hn,
    /// Iterated admissible deformation of a model file
    Grad,
    /// Rank-2 sheaf on P² with c1 = 1, c2 = 2
    Example1,
    /// Rank-2 bundle on the blown-up plane (needs --c and --s)
    Example2,
    /// Recomputed stability table
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Structured,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            report.print(cli.format == Format::Structured);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                CliError::Math(_) => 1,
                _ => 2,
            })
        }
    }
}
