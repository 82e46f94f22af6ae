//! `ttda` — topological timbre analysis from the command line.
//!
//! Subcommands cover the full pipeline: `synth` writes test waveforms,
//! `analyze` produces the per-signal artifacts (waveform, spectrum,
//! embedding, persistence diagram, timbre feature), `sweep` computes
//! m(a, τ) surfaces for the synthesis presets, `batch` runs the
//! real-recording protocol over a directory, and `betti` prints exact
//! Betti numbers of a simplicial complex file.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 flag/format validation,
//! 3 infeasible analysis (signal too short for the requested embedding),
//! 4 partial batch success.

use clap::{Args, Parser, Subcommand};

mod commands;
mod manifest;
mod svg;

use commands::{analyze, batch, betti, sweep, synth};

#[derive(Parser)]
#[command(name = "ttda", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a preset waveform to a 32-bit float WAV file.
    Synth(SynthArgs),
    /// Analyze one signal: waveform, spectrum, embedding, diagram, feature.
    Analyze(AnalyzeArgs),
    /// Compute m(a, tau) sweep surfaces for synthesis presets.
    Sweep(SweepArgs),
    /// Run the real-recording protocol over a directory of WAV files.
    Batch(BatchArgs),
    /// Print Betti numbers of a simplicial complex file.
    Betti(BettiArgs),
}

#[derive(Args, serde::Serialize)]
pub struct SynthArgs {
    /// Waveform preset: triangle, square, sawtooth, modified_sawtooth,
    /// white_noise, pink_noise, brown_noise
    #[arg(long)]
    pub preset: String,
    /// Harmonic strength in [0, 1]
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Fundamental frequency in Hz
    #[arg(long)]
    pub f0: f64,
    /// Sample rate in Hz
    #[arg(long, default_value_t = 48_000.0)]
    pub fs: f64,
    /// Duration in seconds
    #[arg(long, default_value_t = 0.02)]
    pub dur: f64,
    /// Highest harmonic order
    #[arg(long, default_value_t = 10)]
    pub max_harmonic: u32,
    /// Noise seed
    #[arg(long, env = "TTDA_SEED", default_value_t = 7)]
    pub seed: u64,
    /// Output WAV path
    #[arg(long)]
    pub out: std::path::PathBuf,
}

#[derive(Args, serde::Serialize)]
pub struct AnalyzeArgs {
    /// Analyze a WAV file instead of a synthetic signal
    #[arg(long, conflicts_with_all = ["preset", "partial"])]
    pub wav: Option<std::path::PathBuf>,
    /// Synthesize this preset as the input signal
    #[arg(long, conflicts_with = "partial")]
    pub preset: Option<String>,
    /// Harmonic strength for --preset
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Add a partial to a pure sine: MULT:AMP (e.g. 2.0:0.7); repeatable
    #[arg(long)]
    pub partial: Vec<String>,
    /// Fundamental frequency in Hz
    #[arg(long)]
    pub f0: f64,
    /// Sample rate in Hz (synthetic inputs)
    #[arg(long, default_value_t = 48_000.0)]
    pub fs: f64,
    /// Duration in seconds (synthetic inputs)
    #[arg(long, default_value_t = 0.02)]
    pub dur: f64,
    /// Highest harmonic order (synthetic inputs)
    #[arg(long, default_value_t = 10)]
    pub max_harmonic: u32,
    /// Noise seed (synthetic inputs)
    #[arg(long, env = "TTDA_SEED", default_value_t = 7)]
    pub seed: u64,
    /// Delay in milliseconds
    #[arg(long, group = "tau")]
    pub tau_ms: Option<f64>,
    /// Delay in whole samples
    #[arg(long, group = "tau")]
    pub tau_samples: Option<usize>,
    /// Delay as a period fraction P/Q (e.g. 1/2)
    #[arg(long, group = "tau")]
    pub tau_frac: Option<String>,
    /// Keep every Nth embedding point (performance experiments only)
    #[arg(long, default_value_t = 1)]
    pub stride: usize,
    /// Extract this many fundamental periods starting at the amplitude
    /// maximum, then peak-normalize (the real-recording protocol)
    #[arg(long)]
    pub segment_periods: Option<u32>,
    /// Shift the extraction window left instead of failing when it would
    /// overrun the end of the recording
    #[arg(long, default_value_t = false)]
    pub fallback: bool,
    /// Output directory for the artifact files
    #[arg(long, env = "TTDA_OUT_DIR", default_value = "ttda-out")]
    pub out_dir: std::path::PathBuf,
    /// Also emit embedding.svg and diagram.svg scatter plots
    #[arg(long, default_value_t = false)]
    pub svg: bool,
}

#[derive(Args, serde::Serialize)]
pub struct SweepArgs {
    /// Preset to sweep (repeatable)
    #[arg(long)]
    pub preset: Vec<String>,
    /// Sweep all seven presets
    #[arg(long, default_value_t = false)]
    pub all: bool,
    /// Fundamental frequency in Hz
    #[arg(long)]
    pub f0: f64,
    /// Sample rate in Hz
    #[arg(long, default_value_t = 48_000.0)]
    pub fs: f64,
    /// Number of strength steps (grid is 0..=steps over [0, 1])
    #[arg(long, default_value_t = 10)]
    pub a_steps: usize,
    /// Delay grid: period fractions k/divisions for k = 1..=divisions
    #[arg(long, default_value_t = 32)]
    pub tau_divisions: u32,
    /// Highest harmonic order
    #[arg(long, default_value_t = 10)]
    pub max_harmonic: u32,
    /// Base noise seed
    #[arg(long, env = "TTDA_SEED", default_value_t = 7)]
    pub seed: u64,
    /// Number of seeds averaged for noise presets
    #[arg(long, default_value_t = 5)]
    pub seeds: u64,
    /// Worker threads (defaults to logical cores)
    #[arg(long, env = "TTDA_JOBS")]
    pub jobs: Option<usize>,
    /// Output directory
    #[arg(long, env = "TTDA_OUT_DIR", default_value = "ttda-out")]
    pub out_dir: std::path::PathBuf,
}

#[derive(Args, serde::Serialize)]
pub struct BatchArgs {
    /// Directory of WAV files
    #[arg(long)]
    pub audio_dir: std::path::PathBuf,
    /// JSON metadata mapping file names to instrument categories
    #[arg(long)]
    pub metadata: std::path::PathBuf,
    /// Fundamental frequency in Hz (C4 of the reference dataset)
    #[arg(long, default_value_t = 261.6)]
    pub f0: f64,
    /// Periods per analysis segment
    #[arg(long, default_value_t = 4)]
    pub periods: u32,
    /// Metadata key holding the category when entries are objects
    #[arg(long, default_value = "instrument_family_str")]
    pub category_key: String,
    /// Shift the extraction window left instead of skipping recordings
    /// whose amplitude maximum sits too close to the end
    #[arg(long, default_value_t = false)]
    pub fallback: bool,
    /// Worker threads (defaults to logical cores)
    #[arg(long, env = "TTDA_JOBS")]
    pub jobs: Option<usize>,
    /// Output directory
    #[arg(long, env = "TTDA_OUT_DIR", default_value = "ttda-out")]
    pub out_dir: std::path::PathBuf,
}

#[derive(Args, serde::Serialize)]
pub struct BettiArgs {
    /// Complex file: one maximal simplex per line as whitespace-separated
    /// vertex ids; `#` starts a comment
    pub complex: std::path::PathBuf,
}

/// A failure with the exit code it maps to.
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<ttda::Error> for CliError {
    fn from(err: ttda::Error) -> Self {
        let code = match &err {
            ttda::Error::Embedding { .. } | ttda::Error::Extraction { .. } => 3,
            ttda::Error::Io(_) | ttda::Error::Wav(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        Self {
            code: 1,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Synth(args) => synth::run(&args),
        Command::Analyze(args) => analyze::run(&args),
        Command::Sweep(args) => sweep::run(&args),
        Command::Batch(args) => batch::run(&args),
        Command::Betti(args) => betti::run(&args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}

/// Builds a rayon pool honoring `--jobs` / `TTDA_JOBS`.
pub fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let threads = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::validation(format!("could not build thread pool: {e}")))
}
