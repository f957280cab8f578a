use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use onp_core::ingest::Boundary;
use onp_core::{Alphabet, EmptyGapPolicy, GapConstraint, Strategy};

#[derive(Debug, Parser)]
#[command(name = "onpminer", version, about = "Mine one-off negative sequential patterns under a gap constraint")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine every frequent pattern.
    Mine(MineArgs),
    /// Support and occurrences of a single pattern.
    Support(SupportArgs),
    /// Turn numeric CSV series into a line-sequence file.
    Discretize(DiscretizeArgs),
    /// Candidate counts of every strategy on one input.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Lines,
    Csv,
    Events,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmptyGap {
    Reject,
    Accept,
}

impl From<EmptyGap> for EmptyGapPolicy {
    fn from(e: EmptyGap) -> Self {
        match e {
            EmptyGap::Reject => EmptyGapPolicy::Reject,
            EmptyGap::Accept => EmptyGapPolicy::Accept,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    Wide,
    Long,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Upper,
    Lower,
}

impl From<BoundaryArg> for Boundary {
    fn from(b: BoundaryArg) -> Self {
        match b {
            BoundaryArg::Upper => Boundary::UpperInclusive,
            BoundaryArg::Lower => Boundary::LowerInclusive,
        }
    }
}

fn parse_gap(s: &str) -> Result<GapConstraint, String> {
    s.parse().map_err(|e: onp_core::Error| e.to_string())
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    Alphabet::parse(s).map_err(|e| e.to_string())
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse()
}

/// Where sequences come from and how to read them.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, `-` for stdin.
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    pub format: Format,
    /// `name=char` lines, required by `--format events`.
    #[arg(long)]
    pub mapping: Option<PathBuf>,
    #[command(flatten)]
    pub numeric: NumericArgs,
}

/// Numeric CSV layout and binning.
#[derive(Debug, Args)]
pub struct NumericArgs {
    #[arg(long, value_enum, default_value_t = Layout::Wide)]
    pub layout: Layout,
    /// Wide layout: the first field of each row names the series.
    #[arg(long)]
    pub id_column: bool,
    /// Wide layout: skip a header row.
    #[arg(long)]
    pub headers: bool,
    /// Long layout: column identifying the series.
    #[arg(long, default_value = "series_id")]
    pub group_by: String,
    /// Long layout: column ordering values within a series.
    #[arg(long, default_value = "timestamp")]
    pub order_by: String,
    /// Long layout: column holding the value.
    #[arg(long, default_value = "value")]
    pub value: String,
    #[arg(long, default_value_t = 1000.0)]
    pub bin_width: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub origin: f64,
    /// One character per bin, lowest first.
    #[arg(long, default_value = "abcdefg")]
    pub labels: String,
    #[arg(long, value_enum, default_value_t = BoundaryArg::Upper)]
    pub boundary: BoundaryArg,
}

#[derive(Debug, Args)]
pub struct MiningArgs {
    /// Gap constraint `M,N`.
    #[arg(long, value_parser = parse_gap)]
    pub gap: GapConstraint,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub minsup: u64,
    /// Alphabet override; must contain every observed symbol.
    #[arg(long, value_parser = parse_alphabet)]
    pub alphabet: Option<Alphabet>,
    /// Support-check workers; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Longest pattern to consider.
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, value_enum, default_value_t = EmptyGap::Reject)]
    pub empty_gap: EmptyGap,
    /// Accepted for compatibility; mining is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Write `!` instead of `¬`.
    #[arg(long)]
    pub ascii: bool,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub mining: MiningArgs,
    #[arg(long, value_parser = parse_strategy, default_value = "join-prune")]
    pub strategy: Strategy,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Print per-length candidate counts to stderr.
    #[arg(long)]
    pub stats: bool,
    /// Include per-sequence occurrences of every pattern.
    #[arg(long)]
    pub occurrences: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SupportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_parser = parse_gap)]
    pub gap: GapConstraint,
    /// Pattern text; `!` may stand for `¬`.
    #[arg(long, short)]
    pub pattern: String,
    #[arg(long, value_parser = parse_alphabet)]
    pub alphabet: Option<Alphabet>,
    #[arg(long, value_enum, default_value_t = EmptyGap::Reject)]
    pub empty_gap: EmptyGap,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DiscretizeArgs {
    /// Numeric CSV file, `-` for stdin.
    #[arg(long, short)]
    pub input: PathBuf,
    #[command(flatten)]
    pub numeric: NumericArgs,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub mining: MiningArgs,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
    #[command(flatten)]
    pub out: OutputArgs,
}
