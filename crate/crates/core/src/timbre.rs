//! The topological timbre feature and its sweep experiments.
//!
//! The feature `m` of a signal is the Wasserstein distance between the
//! dim-1 persistence diagram of the signal's 2-D delay embedding and that
//! of a pure sine at the same fundamental frequency, embedded identically.
//! Sweeping `m` over harmonic strength `a` and delay `τ` produces the
//! surfaces that locate the informative delays: near `T0/2` for integer
//! harmonics and near `T0/4` (or `3T0/4`) for noise-like content.

use rayon::prelude::*;
use serde::Serialize;

use std::f64::consts::TAU;
use std::io::Write;

use crate::embed::{delay_embed, distance_matrix, delay_from_period, EmbeddingConfig};
use crate::homology::{rips_persistence, PersistenceDiagram};
use crate::sigsynth::{synthesize, Signal, SynthesisConfig, WaveformPreset};
use crate::wasserstein::diagram_distance;
use crate::{Error, Result};

/// A single evaluation of the timbre feature.
#[derive(Debug, Clone, Serialize)]
pub struct TimbreFeature {
    /// Wasserstein distance to the same-f0 sine diagram.
    pub value: f64,
    pub tau_samples: usize,
    /// The period fraction that produced `tau_samples`, when one did.
    pub tau_fraction: Option<(u32, u32)>,
    pub f0: f64,
}

/// The dim-1 persistence diagram of a signal's 2-D delay embedding,
/// restricted to finite features. The cloud is optionally truncated to its
/// first `window_points` points.
pub fn embedding_diagram(
    s: &Signal,
    tau_samples: usize,
    window_points: Option<usize>,
) -> Result<PersistenceDiagram> {
    let cfg = EmbeddingConfig::new(2, tau_samples)?;
    let mut cloud = delay_embed(s, &cfg)?;
    if let Some(n) = window_points {
        if n < 2 {
            return Err(Error::Domain(format!(
                "analysis window of {n} points is too small"
            )));
        }
        cloud.truncate(n);
    }
    let m = distance_matrix(&cloud);
    Ok(rips_persistence(&m, None)?.restrict_finite(1))
}

/// Reference sine with the same sample count and rate as `s`,
/// amplitude 1, at the given starting phase.
fn reference_sine(len: usize, sample_rate: f64, f0: f64, phase: f64) -> Signal {
    Signal {
        samples: (0..len)
            .map(|k| (TAU * f0 * (k as f64 / sample_rate) + phase).sin())
            .collect(),
        sample_rate,
        fundamental_hz: Some(f0),
    }
}

fn timbre_feature_at_phase(
    s: &Signal,
    f0: f64,
    tau_samples: usize,
    phase: f64,
) -> Result<TimbreFeature> {
    if s.is_empty() {
        return Err(Error::Domain("cannot analyze an empty signal".into()));
    }
    if f0.is_nan() || f0 <= 0.0 {
        return Err(Error::Domain(format!("f0 must be positive, got {f0}")));
    }
    let reference = reference_sine(s.len(), s.sample_rate, f0, phase);
    let d_signal = embedding_diagram(s, tau_samples, None)?;
    let d_reference = embedding_diagram(&reference, tau_samples, None)?;
    Ok(TimbreFeature {
        value: diagram_distance(&d_reference, &d_signal)?,
        tau_samples,
        tau_fraction: None,
        f0,
    })
}

/// The timbre feature of a signal against a same-f0 pure sine (amplitude
/// 1, phase 0), both embedded with `d = 2` at the given delay.
pub fn timbre_feature(s: &Signal, f0: f64, tau_samples: usize) -> Result<TimbreFeature> {
    timbre_feature_at_phase(s, f0, tau_samples, 0.0)
}

/// The feature pair used for real recordings: `m` at `τ = T0/2` and at
/// `τ = T0/4`, over a signal that has already been segment-extracted and
/// peak-normalized.
///
/// The reference sine starts at its amplitude maximum, mirroring the
/// segment-extraction protocol. A phase-0 reference against a segment
/// that by construction starts at a peak injects a pure discretization
/// artifact near `τ = T0/2`, where the almost-degenerate embedding is
/// acutely phase-sensitive.
pub fn real_signal_features(s: &Signal, f0: f64) -> Result<(TimbreFeature, TimbreFeature)> {
    let tau_half = delay_from_period(f0, (1, 2), s.sample_rate)?;
    let tau_quarter = delay_from_period(f0, (1, 4), s.sample_rate)?;
    let phase = std::f64::consts::FRAC_PI_2;
    let mut half = timbre_feature_at_phase(s, f0, tau_half, phase)?;
    half.tau_fraction = Some((1, 2));
    let mut quarter = timbre_feature_at_phase(s, f0, tau_quarter, phase)?;
    quarter.tau_fraction = Some((1, 4));
    Ok((half, quarter))
}

/// One delay in a sweep grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TauSpec {
    pub samples: usize,
    pub fraction: Option<(u32, u32)>,
}

/// The default delay grid: period fractions `k/32 · T0` for `k = 1..=32`.
///
/// Fractions that round to a delay of zero samples are skipped (only
/// possible at extreme `f0`/`sample_rate` ratios).
pub fn default_tau_grid(f0: f64, sample_rate: f64) -> Vec<TauSpec> {
    (1..=32)
        .filter_map(|k| {
            delay_from_period(f0, (k, 32), sample_rate)
                .ok()
                .map(|samples| TauSpec {
                    samples,
                    fraction: Some((k, 32)),
                })
        })
        .collect()
}

/// The default harmonic-strength grid `0.0, 0.1, ..., 1.0`.
pub fn default_a_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

/// A computed sweep surface `m(a, τ)` for one preset.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub preset: String,
    pub f0: f64,
    pub sample_rate: f64,
    pub max_harmonic_order: u32,
    pub a_grid: Vec<f64>,
    pub tau_grid: Vec<TauSpec>,
    /// Seeds actually used; a single entry for deterministic presets.
    pub seeds: Vec<u64>,
    /// Seed-averaged surface, indexed `[a][tau]`.
    pub m_values: Vec<Vec<f64>>,
    /// Per-seed surfaces, indexed `[seed][a][tau]`.
    pub m_per_seed: Vec<Vec<Vec<f64>>>,
    pub library_version: String,
}

impl SweepResult {
    /// For each delay, the net growth of `m` across the strength grid —
    /// the mean per-step growth telescopes to
    /// `(m(a_max) - m(a_min)) / (a_max - a_min)`.
    pub fn a_averaged_growth(&self) -> Vec<f64> {
        let first = 0;
        let last = self.a_grid.len() - 1;
        let span = self.a_grid[last] - self.a_grid[first];
        (0..self.tau_grid.len())
            .map(|j| (self.m_values[last][j] - self.m_values[first][j]) / span)
            .collect()
    }

    /// Writes `preset,a,tau_samples,tau_fraction,m,seed` rows, one per
    /// seed and grid cell.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "preset,a,tau_samples,tau_fraction,m,seed")?;
        for (s_idx, &seed) in self.seeds.iter().enumerate() {
            for (i, &a) in self.a_grid.iter().enumerate() {
                for (j, tau) in self.tau_grid.iter().enumerate() {
                    let fraction = tau
                        .fraction
                        .map(|(p, q)| format!("{p}/{q}"))
                        .unwrap_or_default();
                    writeln!(
                        w,
                        "{},{},{},{},{},{}",
                        self.preset,
                        a,
                        tau.samples,
                        fraction,
                        self.m_per_seed[s_idx][i][j],
                        seed
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// Computes the sweep surface `m(a, τ)` for one preset.
///
/// The analysis window is one fundamental period of embedding vectors:
/// for each `(a, seed)` the signal is synthesized once, long enough for
/// the largest delay, and each delay's point cloud is the first
/// `round(fs/f0)` embedding vectors. Noise presets are averaged over
/// `seeds`; deterministic presets evaluate once with the first seed.
/// Grid cells are distributed across the thread pool; assembly preserves
/// grid order regardless of completion order.
pub fn feature_surface(
    preset: WaveformPreset,
    a_grid: &[f64],
    tau_grid: &[TauSpec],
    cfg: &SynthesisConfig,
    seeds: &[u64],
) -> Result<SweepResult> {
    if a_grid.is_empty() || tau_grid.is_empty() || seeds.is_empty() {
        return Err(Error::Domain("sweep grids and seed list must be non-empty".into()));
    }
    cfg.validate()?;
    let period = (cfg.sample_rate / cfg.f0).round() as usize;
    if period < 4 {
        return Err(Error::Domain(format!(
            "fundamental period of {period} samples is too short to analyze"
        )));
    }
    let tau_max = tau_grid.iter().map(|t| t.samples).max().unwrap();
    let len = period + tau_max;
    let seeds: Vec<u64> = if preset.is_noise() {
        seeds.to_vec()
    } else {
        vec![seeds[0]]
    };

    // reference diagrams depend only on tau; compute once
    let reference = reference_sine(len, cfg.sample_rate, cfg.f0, 0.0);
    let reference_diagrams: Vec<PersistenceDiagram> = tau_grid
        .par_iter()
        .map(|tau| embedding_diagram(&reference, tau.samples, Some(period)))
        .collect::<Result<_>>()?;

    let mut m_per_seed = Vec::with_capacity(seeds.len());
    for &seed in &seeds {
        let cfg_seed = SynthesisConfig {
            duration: (len as f64 + 0.5) / cfg.sample_rate,
            noise_seed: seed,
            ..cfg.clone()
        };
        let signals: Vec<Signal> = a_grid
            .iter()
            .map(|&a| synthesize(preset, a, &cfg_seed))
            .collect::<Result<_>>()?;
        let cells: Vec<(usize, usize)> = (0..a_grid.len())
            .flat_map(|i| (0..tau_grid.len()).map(move |j| (i, j)))
            .collect();
        let mut surface = vec![vec![0.0; tau_grid.len()]; a_grid.len()];
        let values: Vec<((usize, usize), f64)> = cells
            .par_iter()
            .map(|&(i, j)| {
                let d = embedding_diagram(&signals[i], tau_grid[j].samples, Some(period))?;
                let m = diagram_distance(&reference_diagrams[j], &d)?;
                Ok(((i, j), m))
            })
            .collect::<Result<_>>()?;
        for ((i, j), m) in values {
            surface[i][j] = m;
        }
        m_per_seed.push(surface);
    }

    let mut m_values = vec![vec![0.0; tau_grid.len()]; a_grid.len()];
    for surface in &m_per_seed {
        for (i, row) in surface.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                m_values[i][j] += m / seeds.len() as f64;
            }
        }
    }

    Ok(SweepResult {
        preset: preset.name().to_string(),
        f0: cfg.f0,
        sample_rate: cfg.sample_rate,
        max_harmonic_order: cfg.max_harmonic_order,
        a_grid: a_grid.to_vec(),
        tau_grid: tau_grid.to_vec(),
        seeds,
        m_values,
        m_per_seed,
        library_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}
