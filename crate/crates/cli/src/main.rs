mod commands;
mod params;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact generating functions for fixed hooks, checked against enumeration.
#[derive(Parser, Debug)]
#[command(name = "fixed-hooks", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare generating-function coefficients with brute-force counts.
    Verify(VerifyArgs),
    /// Print the coefficients of one generating function.
    Series(SeriesArgs),
    /// Print a brute-force count, optionally with its witnesses.
    Count(CountArgs),
    /// Emit an (n x parameter) coefficient table.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantChoice {
    Stated,
    Rederived,
    Both,
}

/// Flags shared by every subcommand. Ranges are `a..b` (inclusive), `a,b,c`,
/// or a single value.
#[derive(Args, Debug, Clone, Default)]
pub struct Shared {
    /// Truncation order N: coefficients of q^0 .. q^(N-1).
    #[arg(short = 'N', long)]
    pub order: Option<String>,
    /// Column index m (range).
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Part or hook size k (range).
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Fixedness offset h (range, may be negative).
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// Partition family: all, odd, distinct, odd-distinct.
    #[arg(long)]
    pub family: Option<String>,
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Key-value config file; flags override it.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem tags (repeatable or comma-separated).
    #[arg(long = "thm", value_delimiter = ',')]
    pub thm: Vec<String>,
    /// Run the whole catalog on the default grid.
    #[arg(long)]
    pub all: bool,
    /// Which reading of formulas that have two.
    #[arg(long, value_enum)]
    pub variant: Option<VariantChoice>,
    /// Append per-case wall time to text reports.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub shared: Shared,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long = "thm")]
    pub thm: String,
    #[arg(long, value_enum)]
    pub variant: Option<VariantChoice>,
    #[command(flatten)]
    pub shared: Shared,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    /// fixed-by-part, fixed-by-hook, hooks, colored-t11, restricted-t12, colored-t13.
    pub oracle: String,
    /// Weight n (range).
    #[arg(long)]
    pub n: Option<String>,
    /// Sum fixed-by-hook counts over every hook size.
    #[arg(long)]
    pub sum_k: bool,
    /// Also print the witnessing partitions.
    #[arg(long)]
    pub list: bool,
    #[command(flatten)]
    pub shared: Shared,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long = "thm")]
    pub thm: String,
    #[arg(long, value_enum)]
    pub variant: Option<VariantChoice>,
    #[command(flatten)]
    pub shared: Shared,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Series(a) => commands::series(a),
        Command::Count(a) => commands::count(a),
        Command::Table(a) => commands::table(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
