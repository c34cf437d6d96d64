use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use plrs_core::oracle::DEFAULT_BUDGET_BITS;

use crate::parse::{self, Threshold};

#[derive(Parser, Debug)]
#[command(
    name = "plrs",
    version,
    about = "Completeness of positive linear recurrence sequences"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Worker threads for search commands [default: available parallelism]
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output format [default depends on the command]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Width of reported root brackets
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tolerance: f64,
    /// Largest horizon the adaptive engine may reach
    #[arg(long, global = true, default_value_t = 1024)]
    pub max_horizon: usize,
    /// Cap on the subset-sum bitset, in bits
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_BITS)]
    pub budget_bits: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the first terms of a sequence
    Gen(GenArgs),
    /// Decide completeness and print the verdict
    Check(CheckArgs),
    /// Closed-form family bounds next to searched maxima
    FamilyTable(FamilyTableArgs),
    /// Search for vectors passing Brown's criterion up to a threshold yet incomplete
    #[command(name = "scan-2l1")]
    Scan2l1(ScanArgs),
    /// Smallest principal root among incomplete vectors
    MinRoot(MinRootArgs),
    /// Roots of x^L - x^(L-1) - k from lambda_L up to 2
    Dense(DenseArgs),
    /// Subset-sum ground truth for one vector
    OracleCheck(OracleArgs),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Comma-separated coefficients, e.g. 1,0,4
    #[arg(allow_hyphen_values = true)]
    pub coeffs: String,
    /// Number of terms
    #[arg(long, short, default_value_t = 10)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Comma-separated coefficients
    #[arg(allow_hyphen_values = true, required_unless_present = "verify")]
    pub coeffs: Option<String>,
    /// Fixed horizon instead of the adaptive engine
    #[arg(long)]
    pub horizon: Option<usize>,
    /// Accept Brown's criterion through 2L-1 as proof (conjectural)
    #[arg(long = "assume-2l1")]
    pub assume_2l1: bool,
    /// Try the root triage first and only run the engine on Unknown
    #[arg(long)]
    pub triage_first: bool,
    /// Exit with code 3 unless the verdict is Complete or Incomplete
    #[arg(long)]
    pub require_definite: bool,
    /// Re-check a JSON verdict from this file ("-" for stdin)
    #[arg(long, conflicts_with_all = ["coeffs", "horizon", "assume_2l1", "triage_first"])]
    pub verify: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// [1, 0^k, N]
    OneZeros,
    /// [1^g, 0^k, N]
    OnesZeros,
    /// [1, 1, 0^k, N]
    TwoOnesZeros,
    /// [1, 0^k, 1^g, N]
    OneZerosOnes,
}

#[derive(Args, Debug)]
pub struct FamilyTableArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Leading ones (trailing ones for one-zeros-ones), e.g. 1..6
    #[arg(long, value_parser = parse::span, default_value = "1")]
    pub g: RangeInclusive<usize>,
    /// Zeros, e.g. 0..6
    #[arg(long, value_parser = parse::span, default_value = "1")]
    pub k: RangeInclusive<usize>,
    /// Largest N the search may try
    #[arg(long, default_value_t = 1 << 24)]
    pub n_limit: u64,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    /// Length or range of lengths, e.g. 3 or 1..3
    #[arg(long = "L", value_parser = parse::span)]
    pub len: RangeInclusive<usize>,
    /// Largest coefficient value
    #[arg(long)]
    pub coeff_cap: u64,
    /// Last index at which Brown's criterion is required, e.g. 2L-1 or 2L-2
    #[arg(long, value_parser = parse::threshold, default_value = "2L-1", allow_hyphen_values = true)]
    pub threshold: Threshold,
}

#[derive(Args, Debug)]
pub struct MinRootArgs {
    #[arg(long = "L")]
    pub len: usize,
    /// Largest coefficient sum
    #[arg(long)]
    pub sum_cap: u64,
}

#[derive(Args, Debug)]
pub struct DenseArgs {
    #[arg(long = "L")]
    pub len: usize,
    /// Gap the scan is compared against
    #[arg(long, default_value_t = 0.05)]
    pub epsilon: f64,
    /// Most roots the scan may compute
    #[arg(long, default_value_t = plrs_core::analytic::DEFAULT_DENSENESS_CAP)]
    pub cap: u128,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(allow_hyphen_values = true)]
    pub coeffs: String,
    /// Prefix length [default: largest affordable, up to max(4L, 64)]
    #[arg(long)]
    pub prefix: Option<usize>,
}
