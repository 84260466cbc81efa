use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use proxi_core::BetaParam;

#[derive(Debug, Parser)]
#[command(name = "proxi", version, about = "Minimum constraint sets for constrained proximity graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the minimum constraint set of each input graph.
    Constraints(ConstraintsArgs),
    /// Draw a graph as SVG, optionally with its constraints and proximity graph.
    Render(RenderArgs),
    /// Time the pipeline stages on random inputs and print CSV.
    Bench(BenchArgs),
    /// Write a random instance or a fixed fixture.
    Generate(GenerateArgs),
    /// Check the fast algorithms against the brute-force oracles.
    Verify(VerifyArgs),
    /// Write the constrained Delaunay triangulation with a constrained-flag column.
    Cdt(CdtArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Cmst,
    Gabriel,
    Beta,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    RandomForest,
    RandomGraph,
    Zigzag,
    Figure2,
    Figure3,
    Figure6,
}

#[derive(Debug, Args)]
pub struct ConstraintsArgs {
    pub family: FamilyArg,
    /// Input graphs; `-` reads standard input. Files ending in `.json` use the JSON format.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// β as `p/q` or a decimal in [1, 2] (beta family only, default 2).
    #[arg(long)]
    pub beta: Option<BetaParam>,
    /// Check containment, and minimality against the oracle when there are at most 16 input edges.
    #[arg(long)]
    pub verify: bool,
    /// Worker threads; inputs are processed in parallel, one per thread.
    #[arg(long, short = 'j')]
    pub jobs: Option<usize>,
    /// Output file, or a directory when there are several inputs. Standard output if absent.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Also write an SVG drawing (single input only).
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    /// Overlay the constraint set and the constrained graph of this family.
    #[arg(long)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub beta: Option<BetaParam>,
    /// Label vertices with their indices.
    #[arg(long)]
    pub labels: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "cmst")]
    pub family: FamilyArg,
    #[arg(long)]
    pub beta: Option<BetaParam>,
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
    pub sizes: Vec<usize>,
    /// Overridden by the PROXI_SEED environment variable.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Runs per size; the fastest is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    /// Vertex count for the random and zigzag kinds.
    #[arg(long, short = 'n', default_value_t = 10)]
    pub n: usize,
    /// Overridden by the PROXI_SEED environment variable.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge cap for random-graph (default n).
    #[arg(long)]
    pub max_edges: Option<usize>,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Only run the checks built from the fast algorithms (no oracle, no size limit).
    #[arg(long)]
    pub skip_oracle: bool,
    #[arg(long, short = 'j')]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CdtArgs {
    pub input: PathBuf,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}
