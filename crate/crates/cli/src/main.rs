mod commands;
mod config;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Learn name-value inconsistencies from runtime assignment traces and
/// report suspicious assignments.
#[derive(Debug, Parser)]
#[command(name = "nvcheck", version, about, propagate_version = true)]
pub struct Cli {
    /// TOML configuration file with [corpus], [negsample], [embed], [train],
    /// [detect] and [trace] tables. Flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Log more (-v info, -vv debug). RUST_LOG overrides.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load traces, merge types, filter names, and split into train/valid/test.
    Ingest(IngestArgs),
    /// Add one generated negative example per positive to a split.
    Sample(SampleArgs),
    /// Train the subword identifier embedding on source files.
    EmbedTrain(EmbedArgs),
    /// Train the classifier on a labeled dataset.
    Train(TrainArgs),
    /// Score traced assignments and report likely inconsistencies.
    Detect(DetectArgs),
    /// Threshold sweeps, ablations, and negative-strategy comparison.
    #[command(subcommand)]
    Eval(EvalCommand),
    /// Run a Python script under the external tracer.
    Trace(TraceArgs),
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    /// Trace files or directories searched recursively for *.jsonl.
    #[arg(long, required = true, num_args = 1.., value_name = "PATH")]
    pub traces: Vec<PathBuf>,
    /// Output dataset directory.
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    /// Number of frequent types kept by type merging (at most 10).
    #[arg(long)]
    pub top_k: Option<usize>,
    /// Held-out test pairs [default: 10000, or 15% of small corpora].
    #[arg(long)]
    pub test_count: Option<usize>,
    /// Train share of the non-test pairs [default: 0.8].
    #[arg(long)]
    pub train_fraction: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    TypeGuided,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    Train,
    Global,
}

#[derive(Debug, Clone, Args)]
pub struct SampleFlags {
    /// Share at or below which a type counts as rare for a name [default: 0.03].
    #[arg(long)]
    pub infreq_threshold: Option<f64>,
    /// Positives the negatives are drawn from [default: train].
    #[arg(long, value_enum)]
    pub scope: Option<ScopeArg>,
    /// Seed of the negative generator.
    #[arg(long)]
    pub sample_seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Dataset directory written by `ingest`.
    #[arg(long, value_name = "DIR")]
    pub data: PathBuf,
    /// Output labeled dataset directory.
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    /// Negative generation strategy [default: type-guided].
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyArg>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub flags: SampleFlags,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    /// Source files or directories searched recursively for *.py.
    #[arg(long, required = true, num_args = 1.., value_name = "PATH")]
    pub sources: Vec<PathBuf>,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub epochs: Option<usize>,
    #[arg(long)]
    pub min_count: Option<u64>,
    #[arg(long)]
    pub negatives: Option<usize>,
    #[arg(long)]
    pub ngram_min: Option<usize>,
    #[arg(long)]
    pub ngram_max: Option<usize>,
    #[arg(long)]
    pub learning_rate: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Also write the vectors as text (one token per line).
    #[arg(long)]
    pub export_text: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TrainFlags {
    #[arg(long)]
    pub batch_size: Option<usize>,
    #[arg(long)]
    pub epochs: Option<usize>,
    #[arg(long)]
    pub learning_rate: Option<f64>,
    #[arg(long)]
    pub dropout: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Components zeroed during training and prediction
    /// (name, value_string, type, length, shape).
    #[arg(long, value_delimiter = ',')]
    pub mask: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Labeled dataset directory written by `sample`.
    #[arg(long, value_name = "DIR")]
    pub data: PathBuf,
    /// Embedding file written by `embed-train`.
    #[arg(long, value_name = "FILE")]
    pub embedding: PathBuf,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    #[command(flatten)]
    pub flags: TrainFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Human,
    Machine,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub embedding: PathBuf,
    /// Trace files or directories searched recursively for *.jsonl.
    #[arg(long, required = true, num_args = 1.., value_name = "PATH")]
    pub traces: Vec<PathBuf>,
    /// Minimum score reported [default: 0.5].
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Report format printed to stdout [default: human].
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Directory for the report files and the run manifest. Without it the
    /// manifest goes to $NVCHECK_RUN_DIR (default .nvcheck/runs).
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum EvalCommand {
    /// Precision, recall, and F1 of a model over the threshold grid.
    Sweep(SweepArgs),
    /// Retrain with each input component masked in turn.
    Ablate(AblateArgs),
    /// Train and evaluate once per negative generation strategy.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_name = "FILE")]
    pub model: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub embedding: PathBuf,
    /// Labeled dataset directory written by `sample`.
    #[arg(long, value_name = "DIR")]
    pub data: PathBuf,
    /// Which part of the labeled dataset to evaluate.
    #[arg(long, default_value = "test", value_parser = ["train", "valid", "test"])]
    pub split: String,
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AblateArgs {
    /// Labeled dataset directory written by `sample`.
    #[arg(long, value_name = "DIR")]
    pub data: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub embedding: PathBuf,
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    #[command(flatten)]
    pub flags: TrainFlags,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Dataset directory written by `ingest`.
    #[arg(long, value_name = "DIR")]
    pub data: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub embedding: PathBuf,
    #[arg(long, value_name = "DIR")]
    pub out: PathBuf,
    #[command(flatten)]
    pub flags: TrainFlags,
    #[command(flatten)]
    pub sample: SampleFlags,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    /// Script to run.
    pub script: PathBuf,
    /// Trace file to write.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    /// Seconds before the script is terminated [default: 600].
    #[arg(long)]
    pub timeout: Option<f64>,
    /// Tracer command line, split on whitespace [default: nvtrace].
    #[arg(long, value_name = "CMD")]
    pub tracer: Option<String>,
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    init_logging(cli.verbose);
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
