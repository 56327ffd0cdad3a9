//! Command-line analyzer for fuzzy relational data: repertory grids,
//! relation matrices and value tables in; JSON reports, CSV tables and DOT
//! Hasse diagrams out.
//!
//! Exit codes: 0 success, 2 input/parse error, 3 contract violation,
//! 4 internal invariant violation.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::RunConfig;

#[derive(Parser)]
#[command(
    name = "bkrel",
    version,
    about = "Fuzzy relational analysis: dependency structures, comparisons, rankings and costs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML config file; flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Connective system (L, KD, KDL, S, S#, G43, G43c); repeat for the
    /// ranking triple. Defaults: L, and L,KDL,KD for rank.
    #[arg(long, global = true)]
    system: Vec<String>,

    /// Product mode: harsh or mean (default mean)
    #[arg(long, global = true)]
    mode: Option<String>,

    /// α-cut: a number in [0, 1] or `mean` (default mean)
    #[arg(long, global = true)]
    alpha: Option<String>,

    /// Independence threshold; defaults to α/2
    #[arg(long, global = true)]
    alpha_low: Option<f64>,

    /// Scale-to-membership map (default affine7)
    #[arg(long, global = true)]
    scale_map: Option<String>,

    /// Column polarity for ranking, e.g. --polarity P1=lo (repeatable)
    #[arg(long, global = true)]
    polarity: Vec<String>,

    /// Output directory (default .)
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,

    /// Restrict outputs to these formats: json, csv, dot (repeatable;
    /// default all)
    #[arg(long, global = true)]
    format: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Dependency structure of a grid: report.json and hasse.dot
    Analyze { grid: PathBuf },
    /// Similarity/difference of two grids over the same constructs
    Compare { a: PathBuf, b: PathBuf },
    /// Cross-context comparison of two grids sharing construct ids
    Contexts { a: PathBuf, b: PathBuf },
    /// Interval ranking of a values CSV across connective systems
    Rank { values: PathBuf },
    /// Interval cost aggregation of a grid's numeric constructs
    Cost { grid: PathBuf },
    /// Relational property report for a relation CSV
    Props { relation: PathBuf },
}

fn run(cli: Cli) -> Result<(), config::CliError> {
    let cfg = RunConfig::assemble(
        cli.config.as_ref(),
        &cli.system,
        cli.mode.as_deref(),
        cli.alpha.as_deref(),
        cli.alpha_low,
        cli.scale_map.as_deref(),
        &cli.polarity,
        cli.out_dir.as_ref(),
        &cli.format,
    )?;
    match &cli.command {
        Command::Analyze { grid } => commands::cmd_analyze(grid, &cfg),
        Command::Compare { a, b } => commands::cmd_compare(a, b, &cfg),
        Command::Contexts { a, b } => commands::cmd_contexts(a, b, &cfg),
        Command::Rank { values } => commands::cmd_rank(values, &cfg),
        Command::Cost { grid } => commands::cmd_cost(grid, &cfg),
        Command::Props { relation } => commands::cmd_props(relation, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
