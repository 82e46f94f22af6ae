//! Topological timbre analysis for audio signals.
//!
//! This crate quantifies the timbre of a sound by looking at the *shape* of
//! its time delay embedding. A scalar signal is embedded into a 2-D point
//! cloud, the cloud's first-order persistent homology is computed over a
//! Vietoris–Rips filtration, and the resulting persistence diagram is
//! compared against that of a pure sine wave at the same fundamental
//! frequency via the Wasserstein distance. The distance is the timbre
//! feature `m`: zero for a pure tone, growing as harmonic or noise content
//! deforms the embedding.
//!
//! # Modules
//!
//! - [`sigsynth`] — pure tones and parametric harmonic/noise test signals
//!   (triangle, square, sawtooth, modified sawtooth, white/pink/brown noise).
//! - [`ingest`] — WAV loading and the analysis-segment extraction protocol
//!   for real recordings.
//! - [`embed`] — time delay embedding, distance matrices, period-fraction
//!   delays.
//! - [`homology`] — exact simplicial homology (boundary operators, Hodge
//!   Laplacians, Betti numbers) and Vietoris–Rips persistent homology.
//! - [`wasserstein`] — exact Wasserstein distance between persistence
//!   diagrams via optimal assignment with diagonal augmentation.
//! - [`timbre`] — the timbre feature `m`, harmonic-strength sweep surfaces
//!   `m(a, τ)`, and the real-recording feature pair at `τ = T0/2, T0/4`.
//!
//! # Example
//!
//! ```
//! use ttda::sigsynth::{SynthesisConfig, WaveformPreset, synthesize};
//! use ttda::embed::delay_from_period;
//! use ttda::timbre::timbre_feature;
//!
//! let cfg = SynthesisConfig::new(150.0, 48_000.0, 2.0 / 150.0, 10, 7).unwrap();
//! let s = synthesize(WaveformPreset::Square, 1.0, &cfg).unwrap();
//! let tau = delay_from_period(150.0, (3, 8), 48_000.0).unwrap();
//! let m = timbre_feature(&s, 150.0, tau).unwrap();
//! assert!(m.value > 0.0);
//! ```

use thiserror::Error;

pub mod embed;
pub mod homology;
pub mod ingest;
pub mod sigsynth;
pub mod timbre;
pub mod wasserstein;

pub use embed::{delay_embed, distance_matrix, DistanceMatrix, EmbeddingConfig, PointCloud};
pub use homology::{PersistenceDiagram, SimplicialComplex};
pub use sigsynth::{Signal, SynthesisConfig, WaveformPreset};
pub use timbre::{timbre_feature, TimbreFeature};
pub use wasserstein::diagram_distance;

/// Errors produced by the analysis pipeline.
#[derive(Error, Debug)]
pub enum Error {
    /// A configuration violated one of its documented bounds.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An argument fell outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The signal is too short for the requested delay embedding.
    #[error(
        "embedding infeasible: signal of {len} samples supports delay <= {max_tau} \
         for dimension {dim}, requested {tau}"
    )]
    Embedding {
        len: usize,
        dim: usize,
        tau: usize,
        max_tau: usize,
    },

    /// Segment extraction would overrun the end of the signal.
    #[error(
        "extraction window of {requested} samples starting at {start} overruns the signal; \
         only {available} samples remain after the amplitude maximum"
    )]
    Extraction {
        start: usize,
        requested: usize,
        available: usize,
    },

    /// The input is degenerate for this operation (e.g. an all-zero signal).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A filtration violated the face-before-coface ordering.
    #[error("filtration integrity error: {0}")]
    Integrity(String),

    /// A persistence diagram with infinite features was passed where only
    /// finite features are allowed.
    #[error(
        "diagram contains an infinite feature; filter to finite features of a single \
         dimension before computing distances"
    )]
    InfiniteFeature,

    /// File contents did not match the expected format.
    #[error("format error: {0}")]
    Format(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("WAV error: {0}")]
    Wav(#[from] hound::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
