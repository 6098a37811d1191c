//! `pathpower`: optimal radio k-colorings of path powers from the command
//! line.
//!
//! Data goes to stdout (or `--out`), warnings to stderr. Exit status is 0 on
//! success, 1 on a domain failure (hypothesis, invalid coloring, mismatch)
//! and 2 on usage or input-schema errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "pathpower",
    version,
    about = "Radio k-colorings of path powers P_n^m"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct InstanceArgs {
    /// Path length (the path has n+1 vertices).
    #[arg(long)]
    n: usize,
    /// Power of the path.
    #[arg(long)]
    m: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Consistent,
    AsPrinted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct OracleArgs {
    /// Largest instance (in vertices) the exact search accepts.
    #[arg(long, default_value_t = 11)]
    max_vertices: usize,
    /// Stop the exact search after this many nodes.
    #[arg(long)]
    node_budget: Option<u64>,
    /// Search root branches in parallel.
    #[arg(long)]
    parallel: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an optimal radio k-coloring and print it as JSON.
    Color {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        k: u64,
        /// Build the coloring even when k is below the closed-form regime.
        #[arg(long)]
        unchecked: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the closed-form span.
    Formula {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "consistent")]
        variant: VariantArg,
        #[arg(long)]
        unchecked: bool,
    },
    /// Check a coloring file against the radio condition.
    Verify {
        input: PathBuf,
        /// Also report the optimal/loose decomposition and the certificate.
        #[arg(long)]
        decompose: bool,
    },
    /// Print the layer structure and vertex names.
    Layers {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Compute rc_k exactly by branch-and-bound (small instances only).
    Exact {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Compare formula, construction and (optionally) the oracle over a grid.
    Sweep {
        /// Range of n, e.g. `2..9` (inclusive).
        #[arg(long)]
        n: String,
        /// Range of m, e.g. `1..3` (inclusive); pairs with m > n are skipped.
        #[arg(long)]
        m: String,
        /// `hyp..hyp+2` (relative to the smallest admissible k) or a list `3,5..7`.
        #[arg(long, default_value = "hyp")]
        k: String,
        #[arg(long, value_enum, default_value = "consistent")]
        variant: VariantArg,
        /// Run the exact oracle on instances within its limits.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        oracle_args: OracleArgs,
        /// Evaluate instances in parallel (row order is unaffected).
        #[arg(long)]
        jobs: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
