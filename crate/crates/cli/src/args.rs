use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fpga-repair",
    version,
    about = "Spare row/column and spare tile repair planning for FPGA block matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a repair plan.
    #[command(subcommand)]
    Repair(RepairCommand),
    /// Run a seeded batch of tile-repair trials.
    Experiment(ExperimentArgs),
    /// Draw a matrix, optionally with a repair overlay.
    Render(RenderArgs),
}

#[derive(Debug, Subcommand)]
pub enum RepairCommand {
    /// Exact minimum cover by spare rows and columns.
    Lines(LinesArgs),
    /// Greedy cover by n×n spare tiles.
    Tiles(TilesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormatArg {
    Auto,
    Grid,
    Faultlist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Rows,
    Cols,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OverlayArg {
    None,
    Lines,
    Tiles,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matrix file: a `p q n` header, then a 0/1 grid or `i j` fault lines.
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,

    #[arg(long = "input-format", value_enum, default_value = "auto")]
    pub input_format: InputFormatArg,
}

#[derive(Debug, Args)]
pub struct LinesArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, value_name = "N")]
    pub spare_cols: usize,

    #[arg(long, value_name = "M")]
    pub spare_rows: usize,

    /// Physical spare column indices (comma separated); default is just past the grid.
    #[arg(long, value_delimiter = ',', value_name = "IDS")]
    pub spare_col_ids: Option<Vec<usize>>,

    #[arg(long, value_delimiter = ',', value_name = "IDS")]
    pub spare_row_ids: Option<Vec<usize>>,

    /// Also list every irredundant cover.
    #[arg(long)]
    pub all_solutions: bool,

    /// Refuse exact expansion above this many faults.
    #[arg(long, default_value_t = fpga_repair::exact::DEFAULT_FAULT_CAP)]
    pub fault_cap: usize,

    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TilesArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, value_enum, default_value = "auto")]
    pub strategy: StrategyArg,

    /// Zero-pad the matrix up to a multiple of the tile side.
    #[arg(long)]
    pub pad: bool,

    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,

    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value_t = 200)]
    pub trials: usize,

    /// Tile rows, `lo:hi` or a single value.
    #[arg(long = "p", value_parser = parse_range, default_value = "3:7")]
    pub p: RangeInclusive<usize>,

    /// Tile columns.
    #[arg(long = "q", value_parser = parse_range, default_value = "3:7")]
    pub q: RangeInclusive<usize>,

    /// Tile side.
    #[arg(long = "n", value_parser = parse_range, default_value = "2:5")]
    pub n: RangeInclusive<usize>,

    /// Smallest fault count; the largest is n·p·q.
    #[arg(long, default_value_t = 3)]
    pub k_min: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Writes PREFIX.csv and PREFIX.json.
    #[arg(long, value_name = "PREFIX")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, value_enum, default_value = "none")]
    pub overlay: OverlayArg,

    /// Budget for the `lines` overlay; unlimited when omitted.
    #[arg(long)]
    pub spare_cols: Option<usize>,

    #[arg(long)]
    pub spare_rows: Option<usize>,

    #[arg(long)]
    pub pad: bool,

    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |v: &str| {
        v.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{v}` is not a count"))
    };
    let (lo, hi) = match s.split_once(':') {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("range `{s}` must satisfy 1 <= lo <= hi"));
    }
    Ok(lo..=hi)
}
