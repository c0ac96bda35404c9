mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Generalized cross products in odd dimensions.
#[derive(Debug, Parser)]
#[command(name = "ncross", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List dimensions 3..=MAX with their pair counts, or why they are infeasible.
    Dims {
        #[arg(long, default_value_t = 15)]
        max: usize,
    },
    /// Print every perfect matching available to one axis.
    Matchings {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        axis: usize,
    },
    /// Stream every scheme of dimension N.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Resume after the scheme with this branch path (e.g. 0,2,1,0,0).
        #[arg(long)]
        after: Option<String>,
    },
    /// Dump the signed structure tensor of a scheme.
    Tensor {
        /// File path, inline scheme text, or a reference row such as table4:11.
        #[arg(long)]
        scheme: String,
    },
    /// Evaluate A x B and its axiom defects.
    Cross {
        #[arg(long)]
        scheme: String,
        #[arg(short = 'A', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'B', allow_hyphen_values = true)]
        b: String,
    },
    /// Decide which axioms a scheme satisfies identically.
    Verify {
        #[arg(long)]
        scheme: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify every scheme of dimension N.
    Census {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Resume after the scheme with this branch path.
        #[arg(long, requires = "start_id")]
        after: Option<String>,
        /// Id of the first record when resuming.
        #[arg(long)]
        start_id: Option<u64>,
    },
    /// Recompute the reference tables and compare with the embedded data.
    Tables,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
