use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "eulerpaths",
    version,
    about = "Exact counts of ballot and Dyck paths avoiding runs of equal steps"
)]
pub struct Cli {
    /// Output format [default: text, or `format` from the config file]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// File of `key = value` defaults (keys: r, order, format, max-n, r-set)
    #[arg(long, global = true, env = "EULERPATHS_CONFIG")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count paths to one point
    Count(CountArgs),
    /// Print a table of counts, polynomial extensions or Euler coefficients
    Table(TableArgs),
    /// Print generating-function coefficients
    Series(SeriesArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Ballot,
    Dyck,
}

/// `up` is a north step of a ballot path, `down` an east step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pattern {
    Up,
    Down,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value = "ballot")]
    pub boundary: BoundaryArg,

    /// Direction of the forbidden run
    #[arg(long, value_enum)]
    pub pattern: Pattern,

    /// Forbidden run length [default: 4]
    #[arg(long, env = "EULERPATHS_R")]
    pub r: Option<u64>,

    /// Endpoint: `N M` for ballot paths, `X Y` for Dyck paths
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, required = true)]
    pub at: Vec<i64>,

    /// Also count by brute-force enumeration and compare
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    S,
    T,
    Tprime,
    P,
    Q,
    Euler,
    DyckUp,
    DyckDown,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,

    /// Run length [default: 4]
    #[arg(long, env = "EULERPATHS_R")]
    pub r: Option<u64>,

    /// Root offset of the q family
    #[arg(long)]
    pub alpha: Option<u64>,

    /// Row range `A..B` (m, or x for euler, or height for dyck tables)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub rows: Option<RangeInclusive<i64>>,

    /// Column range `A..B` (n, or k for euler, or length for dyck tables)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub cols: Option<RangeInclusive<i64>>,

    /// Compare against the embedded reference table of the same kind
    #[arg(long)]
    pub reference_check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Ballot counts avoiding east runs, summed over n at fixed m
    DownGf,
    /// Dyck paths to (2n, 0) avoiding down runs
    DyckF,
    /// Conjectured generating function of p_n(x), r = 4
    Conjecture,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub which: Which,

    /// Run length [default: 4]
    #[arg(long, env = "EULERPATHS_R")]
    pub r: Option<u64>,

    /// Row m for down-gf
    #[arg(long, default_value_t = 0)]
    pub m: u64,

    /// Argument x for conjecture
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub x: i64,

    /// Truncation order [default: 64]
    #[arg(long, env = "EULERPATHS_ORDER")]
    pub order: Option<usize>,

    /// Allow the conjecture ansatz with r other than 4 (exploratory only)
    #[arg(long)]
    pub experimental: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Tables,
    Bridge,
    Oracle,
    Conjecture,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,

    /// Largest n checked [default: 12]
    #[arg(long)]
    pub max_n: Option<u64>,

    /// Comma-separated run lengths [default: 2,3,4,5]
    #[arg(long, value_delimiter = ',')]
    pub r_set: Option<Vec<u64>>,

    /// Series truncation order [default: 64]
    #[arg(long, env = "EULERPATHS_ORDER")]
    pub order: Option<usize>,
}

/// Parses `A..B` (inclusive, either end may be negative) or a single `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected A..B with integers A <= B, got {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}
