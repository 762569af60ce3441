//! `schur`: verify, search for and compose sum-free partitions, and report
//! Schur number lower bounds.
//!
//! Exit status: 0 success, 1 verification failure or exhausted search,
//! 2 malformed input or arguments, 3 budget exhausted.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "schur", version, about = "Sum-free partition toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a partition file is a Schur partition.
    Verify(VerifyArgs),
    /// Print order, class sizes and ranges of a partition.
    Profile { file: PathBuf },
    /// Extend a base partition, resume a checkpoint, or run an exhaustive
    /// search for S(k).
    Search(SearchArgs),
    /// Compose a template with an inner partition.
    Compose(ComposeArgs),
    /// Check a template file.
    TemplateValidate { file: PathBuf },
    /// Find the largest template with a given colour count.
    TemplateSearch(TemplateSearchArgs),
    /// Best known lower bounds from a registry.
    Bounds(BoundsArgs),
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Also require x and n+1-x to share a colour.
    #[arg(long)]
    pub symmetric: bool,
    /// Position released from mirror pairing (repeatable).
    #[arg(long = "exception", value_name = "X")]
    pub exceptions: Vec<usize>,
    #[arg(long, default_value_t = schur_core::verifier::DEFAULT_VIOLATION_CAP)]
    pub max_violations: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VarOrder {
    Ascending,
    MostBlocked,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ColourOrderArg {
    Fixed,
    LeastBlocked,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Deterministic,
    Fast,
}

#[derive(Debug, clap::Args)]
pub struct SearchArgs {
    /// Base partition of [1, b]; b+1 goes into a new colour.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["resume", "exhaustive"])]
    pub seed: Option<PathBuf>,
    /// Continue from a checkpoint file.
    #[arg(long, value_name = "FILE", conflicts_with = "exhaustive")]
    pub resume: Option<PathBuf>,
    /// Find the largest n with a k-colour Schur partition of [1, n].
    #[arg(long, value_name = "K")]
    pub exhaustive: Option<usize>,
    /// Order cap for --exhaustive.
    #[arg(long, default_value_t = 200, requires = "exhaustive")]
    pub cap: usize,
    /// Target order N (required with --seed).
    #[arg(long)]
    pub target: Option<usize>,
    #[arg(long)]
    pub symmetric: bool,
    /// Position released from mirror pairing (repeatable).
    #[arg(long = "exception", value_name = "X")]
    pub exceptions: Vec<usize>,
    #[arg(long, value_enum, default_value_t = VarOrder::Ascending)]
    pub var_order: VarOrder,
    #[arg(long, value_enum, default_value_t = ColourOrderArg::Fixed)]
    pub colour_order: ColourOrderArg,
    /// Break colour-order ties at random.
    #[arg(long)]
    pub random_ties: bool,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(long)]
    pub max_seconds: Option<f64>,
    #[arg(long)]
    pub no_forward_check: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, value_enum, default_value_t = Mode::Deterministic)]
    pub mode: Mode,
    /// Report progress on stderr every this many nodes (0 = never).
    #[arg(long, default_value_t = 1_000_000)]
    pub progress_every: u64,
    /// Write the witness here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Where to write the checkpoint when the budget runs out.
    #[arg(long, default_value = "search.ckpt")]
    pub checkpoint: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct ComposeArgs {
    #[arg(long)]
    pub template: PathBuf,
    #[arg(long)]
    pub inner: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub rounds: usize,
    /// Use a smaller phi than the template's own.
    #[arg(long)]
    pub phi: Option<usize>,
    /// Write the final partition here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct TemplateSearchArgs {
    #[arg(long)]
    pub colours: usize,
    #[arg(long)]
    pub max_order: usize,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 8)]
    pub max_k: usize,
    /// Registry file; the bundled registry is used when omitted.
    #[arg(long)]
    pub registry: Option<PathBuf>,
    /// Also register this template file as a recurrence rule (repeatable).
    #[arg(long = "template", value_name = "FILE")]
    pub templates: Vec<PathBuf>,
    /// Write the merged registry to this file.
    #[arg(long, value_name = "FILE")]
    pub export: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => commands::verify(&args),
        Command::Profile { file } => commands::profile(&file),
        Command::Search(args) => commands::search(&args),
        Command::Compose(args) => commands::compose(&args),
        Command::TemplateValidate { file } => commands::template_validate(&file),
        Command::TemplateSearch(args) => commands::template_search(&args),
        Command::Bounds(args) => commands::bounds(&args),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::Status::Malformed as u8)
        }
    }
}
