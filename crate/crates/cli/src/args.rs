use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "trivol",
    version,
    about = "Exact volume of the convex hull of x1*x2*x3 over a box"
)]
pub struct Cli {
    /// Emit compact single-line JSON (selftest: a JSON report instead of text)
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to PATH instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form volume, case and normalization record
    Volume(DomainArgs),
    /// Every intermediate quantity of the mixed-volume pipeline
    Breakdown(DomainArgs),
    /// Compare the closed form with the quadrature and Monte-Carlo oracles
    Verify(VerifyArgs),
    /// Evaluate a grid of ratios (or a list of domains) to CSV
    Sweep(SweepArgs),
    /// Run the embedded golden checks
    Selftest,
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Three bound pairs `lo,hi`
    #[arg(
        long,
        num_args = 3,
        value_name = "LO,HI",
        allow_hyphen_values = true,
        conflicts_with_all = ["cl", "domain"]
    )]
    pub bounds: Option<Vec<String>>,

    /// Three center/half-length pairs `c,l`
    #[arg(
        long,
        num_args = 3,
        value_name = "C,L",
        allow_hyphen_values = true,
        conflicts_with = "domain"
    )]
    pub cl: Option<Vec<String>>,

    /// JSON file with `{"bounds": [[lo, hi], ...]}` or `{"intervals": [{"c": .., "l": ..}, ...]}`
    #[arg(long, value_name = "PATH")]
    pub domain: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub domain: DomainArgs,

    /// Monte-Carlo sample count (0 skips the Monte-Carlo oracle)
    #[arg(long, default_value_t = 0, value_name = "N")]
    pub mc_samples: u64,

    /// Monte-Carlo seed
    #[arg(long, default_value_t = 0, value_name = "S")]
    pub seed: u64,

    /// Run the quadrature oracle in f64 (same as TRIVOL_MODE=float)
    #[arg(long)]
    pub float: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Ratio c1/l1 as `start:stop:step` or a single value
    #[arg(
        long,
        value_name = "RANGE",
        allow_hyphen_values = true,
        default_value = "0"
    )]
    pub r1: String,

    /// Ratio c2/l2 as `start:stop:step` or a single value
    #[arg(
        long,
        value_name = "RANGE",
        allow_hyphen_values = true,
        default_value = "0"
    )]
    pub r2: String,

    /// Ratio c3/l3 as `start:stop:step` or a single value
    #[arg(
        long,
        value_name = "RANGE",
        allow_hyphen_values = true,
        default_value = "0"
    )]
    pub r3: String,

    /// Half-lengths: one value for all three variables, or `l1,l2,l3`
    #[arg(long, value_name = "L", default_value = "1")]
    pub l: String,

    /// JSON file holding an array of domains; replaces the grid
    #[arg(long, value_name = "PATH", conflicts_with_all = ["r1", "r2", "r3", "l"])]
    pub domains: Option<PathBuf>,
}
