//! `mscale`: generate benchmark signals, compute single- and multi-scale
//! entropy profiles of CSV signals, batch over realizations, slide windows,
//! and compare groups.

mod commands;
mod csvio;
mod errors;
mod flags;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use errors::CliError;
use flags::{EntropyFlags, EstimatorArg, ProfileFlags};

#[derive(Parser)]
#[command(name = "mscale", version, about = "Multiscale entropy analysis toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic benchmark signal as CSV.
    Generate {
        #[command(subcommand)]
        kind: commands::generate::Kind,
    },
    /// Print the single-scale entropy of a CSV signal.
    Entropy(EntropyCmd),
    /// Compute a multiscale entropy profile of a CSV signal.
    Profile(ProfileCmd),
    /// Aggregate profiles over many realizations into per-scale statistics.
    Batch(BatchCmd),
    /// Compute profiles over a window sliding along the signal.
    Window(WindowCmd),
    /// Compare two groups of signals per scale (Welch t, BH-FDR).
    Compare(CompareCmd),
}

#[derive(clap::Args)]
struct EntropyCmd {
    /// Input CSV signal.
    #[arg(long, value_name = "CSV")]
    r#in: PathBuf,
    #[arg(long, value_enum)]
    estimator: EstimatorArg,
    #[command(flatten)]
    entropy: EntropyFlags,
}

#[derive(clap::Args)]
struct ProfileCmd {
    /// Input CSV signal.
    #[arg(long, value_name = "CSV")]
    r#in: PathBuf,
    #[command(flatten)]
    profile: ProfileFlags,
    /// Output CSV (tau,entropy,defined).
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

#[derive(clap::Args)]
struct BatchCmd {
    /// Generator for synthetic realizations (paper-default parameters).
    #[arg(long, value_enum, conflicts_with = "in_glob")]
    gen: Option<commands::batch::GenKind>,
    /// Glob of input CSV signals to treat as realizations.
    #[arg(long, value_name = "GLOB")]
    in_glob: Option<String>,
    /// Number of generated realizations (seeds seed-base..seed-base+R-1).
    #[arg(long, default_value_t = 1)]
    realizations: usize,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    /// Sample count for generated realizations (generator default if unset).
    #[arg(long)]
    samples: Option<usize>,
    #[command(flatten)]
    profile: ProfileFlags,
    /// Output CSV (tau,mean,sd,cv,n_defined,n_total).
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

#[derive(clap::Args)]
struct WindowCmd {
    /// Input CSV signal.
    #[arg(long, value_name = "CSV")]
    r#in: PathBuf,
    /// Window length in samples.
    #[arg(long, default_value_t = 2000)]
    window: usize,
    /// Fractional overlap of consecutive windows, in [0, 1).
    #[arg(long, default_value_t = 0.9)]
    overlap: f64,
    #[command(flatten)]
    profile: ProfileFlags,
    /// Output CSV (window_start,tau,entropy,defined).
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

#[derive(clap::Args)]
struct CompareCmd {
    /// Glob of group-A CSV signals.
    #[arg(long, value_name = "GLOB")]
    group_a: String,
    /// Glob of group-B CSV signals.
    #[arg(long, value_name = "GLOB")]
    group_b: String,
    #[command(flatten)]
    profile: ProfileFlags,
    /// Output CSV (tau,p_raw,p_fdr,log10_p_fdr).
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

/// MSCALE_THREADS caps the worker pool; 0 or unset picks the default.
fn init_thread_pool() {
    if let Ok(value) = std::env::var("MSCALE_THREADS") {
        if let Ok(k) = value.parse::<usize>() {
            if k > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate { kind } => commands::generate::run(kind),
        Command::Entropy(args) => commands::entropy::run(&args.r#in, args.estimator, &args.entropy),
        Command::Profile(args) => commands::profile::run(&args.r#in, &args.profile, &args.out),
        Command::Batch(args) => commands::batch::run(&args),
        Command::Window(args) => {
            commands::window::run(&args.r#in, args.window, args.overlap, &args.profile, &args.out)
        }
        Command::Compare(args) => {
            commands::compare::run(&args.group_a, &args.group_b, &args.profile, &args.out)
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
