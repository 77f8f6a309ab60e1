//! `degseq`: command line front end for the degree sequence laboratory.
//!
//! Exit codes are part of the contract: 0 for an affirmative answer, 1 for a
//! negative one (not graphical, a failed validation), 2 for unusable input,
//! 3 for a broken internal invariant that should be reported as a bug.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degseq_core::SamplerKind;

#[derive(Parser)]
#[command(name = "degseq", version, about = "Degree sequence laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum SamplerArg {
    Iid,
    #[default]
    Renyi,
}

impl From<SamplerArg> for SamplerKind {
    fn from(a: SamplerArg) -> Self {
        match a {
            SamplerArg::Iid => SamplerKind::Iid,
            SamplerArg::Renyi => SamplerKind::Renyi,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Csv,
    Json,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a degree sequence is graphical.
    ///
    /// The input holds whitespace-separated nonnegative integers; `#` starts
    /// a comment.  Reads stdin when no file is given.
    Check {
        /// Input file, `-` or absent for stdin.
        file: Option<PathBuf>,
    },
    /// Construct a simple graph realizing a graphical sequence.
    ///
    /// Vertex i (1-based in the output) receives exactly the i-th degree of
    /// the input.  The construction is verified edge by edge before anything
    /// is written.
    Realize {
        /// Input file, `-` or absent for stdin.
        file: Option<PathBuf>,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw degree sequences from a tail family.
    Sample {
        /// Distribution config file (JSON).
        #[arg(long)]
        dist: PathBuf,
        /// Sequence length.
        #[arg(long)]
        n: u64,
        /// Number of sequences.
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// RNG seed; drawn fresh and echoed when absent.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        sampler: SamplerArg,
        /// Write sequences here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate P(graphical) over a grid of sequence lengths.
    Estimate {
        /// Distribution config file (JSON).
        #[arg(long)]
        dist: PathBuf,
        /// Comma-separated, strictly increasing sequence lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<u64>,
        /// Trials per grid point.
        #[arg(long)]
        trials: u64,
        /// RNG seed; drawn fresh and echoed when absent.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; the output is identical for every value.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t)]
        sampler: SamplerArg,
        /// Output base path: writes <out>.csv and/or <out>.json.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Probe a tail family and label its asymptotic regime.
    Classify {
        /// Distribution config file (JSON).
        #[arg(long)]
        dist: PathBuf,
        /// Largest probed n (at least 1000).
        #[arg(long, default_value_t = 1 << 20)]
        probe_bound: u64,
    },
    /// Cross-check the two samplers against each other and the exact laws.
    ValidateSampler {
        /// Distribution config file (JSON).
        #[arg(long)]
        dist: PathBuf,
        /// Sequence length for the per-sample checks.
        #[arg(long, default_value_t = 100)]
        n: u64,
        /// Draws per side.
        #[arg(long, default_value_t = 20_000)]
        draws: u64,
        /// RNG seed; drawn fresh and echoed when absent.
        #[arg(long)]
        seed: Option<u64>,
        /// Deliberately bias one side; the run must then fail.
        #[arg(long, hide = true)]
        negative_control: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file } => commands::check(file.as_deref()),
        Command::Realize { file, out } => commands::realize(file.as_deref(), out.as_deref()),
        Command::Sample {
            dist,
            n,
            count,
            seed,
            sampler,
            out,
        } => commands::sample(&dist, n, count, seed, sampler.into(), out.as_deref()),
        Command::Estimate {
            dist,
            grid,
            trials,
            seed,
            workers,
            sampler,
            out,
            format,
        } => commands::estimate(
            &dist,
            grid,
            trials,
            seed,
            workers,
            sampler.into(),
            out.as_deref(),
            format,
        ),
        Command::Classify { dist, probe_bound } => commands::classify(&dist, probe_bound),
        Command::ValidateSampler {
            dist,
            n,
            draws,
            seed,
            negative_control,
        } => commands::validate_sampler(&dist, n, draws, seed, negative_control),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("degseq: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
