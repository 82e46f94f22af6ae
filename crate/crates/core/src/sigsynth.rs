//! Synthetic test-signal generation.
//!
//! Signals are built as a crossfade between a pure sine at the fundamental
//! frequency and a harmonically rich component:
//!
//! ```text
//! s(t; a) = (1 - a) sin(2π f0 t)
//!         + a ( Σ_{n=1..N} A(n) sin(2π n f0 t) + shaped_noise(t) )
//! ```
//!
//! where `A(n)` is the preset's harmonic amplitude law and the shaped noise
//! is white noise spectrally weighted by the preset's `B(f)` law through a
//! forward/inverse discrete Fourier transform. Seven presets cover the
//! classic analog waveforms and the three standard noise colors.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::{Error, Result};

use std::f64::consts::TAU;

/// A uniformly sampled real-valued waveform.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    /// Amplitude samples (dimensionless).
    pub samples: Vec<f64>,
    /// Samples per second (Hz).
    pub sample_rate: f64,
    /// Fundamental frequency, when known (Hz).
    pub fundamental_hz: Option<f64>,
}

impl Signal {
    /// Wraps raw samples, checking the type invariants: positive sample
    /// rate, non-empty, all samples finite.
    pub fn new(samples: Vec<f64>, sample_rate: f64, fundamental_hz: Option<f64>) -> Result<Self> {
        if !sample_rate.is_finite() || sample_rate <= 0.0 {
            return Err(Error::Config(format!(
                "sample_rate must be > 0, got {sample_rate}"
            )));
        }
        if samples.is_empty() {
            return Err(Error::Config("signal must contain at least one sample".into()));
        }
        if let Some(bad) = samples.iter().find(|x| !x.is_finite()) {
            return Err(Error::Config(format!("non-finite sample {bad} in signal")));
        }
        if let Some(f0) = fundamental_hz {
            if !f0.is_finite() || f0 <= 0.0 {
                return Err(Error::Config(format!("fundamental_hz must be > 0, got {f0}")));
            }
        }
        Ok(Self {
            samples,
            sample_rate,
            fundamental_hz,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Duration in seconds.
    pub fn duration(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate
    }
}

/// Harmonic indices admitted by a preset's amplitude law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicParity {
    /// Every integer harmonic 1, 2, 3, ...
    All,
    /// Odd harmonics only: 1, 3, 5, ...
    OddOnly,
}

/// One of the seven synthesis patterns: a harmonic amplitude law `A(n)`
/// plus a noise weight law `B(f)`.
///
/// The four deterministic presets have `B(f) = 0`; the three noise presets
/// have `A(n) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveformPreset {
    /// `A(n) = 1/n²`, odd harmonics only.
    Triangle,
    /// `A(n) = 1/n`, odd harmonics only.
    Square,
    /// `A(n) = 1/n`, all harmonics.
    Sawtooth,
    /// `A(n) = 1/n²`, all harmonics.
    ModifiedSawtooth,
    /// `B(f) = 1`.
    WhiteNoise,
    /// `B(f) = 1/√f`.
    PinkNoise,
    /// `B(f) = 1/f`.
    BrownNoise,
}

impl WaveformPreset {
    /// All seven presets, in the conventional order.
    pub const ALL: [WaveformPreset; 7] = [
        WaveformPreset::Triangle,
        WaveformPreset::Square,
        WaveformPreset::Sawtooth,
        WaveformPreset::ModifiedSawtooth,
        WaveformPreset::WhiteNoise,
        WaveformPreset::PinkNoise,
        WaveformPreset::BrownNoise,
    ];

    /// Amplitude of the n-th harmonic, `A(n) ≥ 0`. Zero for harmonics the
    /// preset's parity excludes and for the noise presets.
    pub fn harmonic_amplitude(&self, n: u32) -> f64 {
        debug_assert!(n >= 1);
        if self.harmonic_parity() == HarmonicParity::OddOnly && n.is_multiple_of(2) {
            return 0.0;
        }
        let n = n as f64;
        match self {
            WaveformPreset::Triangle | WaveformPreset::ModifiedSawtooth => 1.0 / (n * n),
            WaveformPreset::Square | WaveformPreset::Sawtooth => 1.0 / n,
            WaveformPreset::WhiteNoise | WaveformPreset::PinkNoise | WaveformPreset::BrownNoise => {
                0.0
            }
        }
    }

    pub fn harmonic_parity(&self) -> HarmonicParity {
        match self {
            WaveformPreset::Triangle | WaveformPreset::Square => HarmonicParity::OddOnly,
            _ => HarmonicParity::All,
        }
    }

    /// Noise weight `B(f) ≥ 0` at frequency `f` in Hz.
    ///
    /// The pink and brown laws diverge at `f = 0`; the DC weight is defined
    /// as 0 there so shaped noise carries no mean drift.
    pub fn noise_weight(&self, f: f64) -> f64 {
        match self {
            WaveformPreset::WhiteNoise => 1.0,
            WaveformPreset::PinkNoise if f > 0.0 => 1.0 / f.sqrt(),
            WaveformPreset::BrownNoise if f > 0.0 => 1.0 / f,
            _ => 0.0,
        }
    }

    /// True for the three noise presets (`A(n) = 0` for all n).
    pub fn is_noise(&self) -> bool {
        matches!(
            self,
            WaveformPreset::WhiteNoise | WaveformPreset::PinkNoise | WaveformPreset::BrownNoise
        )
    }

    /// Canonical lowercase name, as used in CLI flags and CSV output.
    pub fn name(&self) -> &'static str {
        match self {
            WaveformPreset::Triangle => "triangle",
            WaveformPreset::Square => "square",
            WaveformPreset::Sawtooth => "sawtooth",
            WaveformPreset::ModifiedSawtooth => "modified_sawtooth",
            WaveformPreset::WhiteNoise => "white_noise",
            WaveformPreset::PinkNoise => "pink_noise",
            WaveformPreset::BrownNoise => "brown_noise",
        }
    }

    pub fn from_name(name: &str) -> Option<WaveformPreset> {
        Self::ALL.iter().copied().find(|p| p.name() == name)
    }
}

/// Parameters shared by every synthesis call.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthesisConfig {
    /// Fundamental frequency (Hz). Must be below Nyquist.
    pub f0: f64,
    /// Sample rate (Hz).
    pub sample_rate: f64,
    /// Duration in seconds; the signal holds `⌊duration · sample_rate⌋` samples.
    pub duration: f64,
    /// Highest harmonic order N included in the harmonic sum.
    pub max_harmonic_order: u32,
    /// Seed for the white-noise generator.
    pub noise_seed: u64,
}

impl SynthesisConfig {
    pub fn new(
        f0: f64,
        sample_rate: f64,
        duration: f64,
        max_harmonic_order: u32,
        noise_seed: u64,
    ) -> Result<Self> {
        let cfg = Self {
            f0,
            sample_rate,
            duration,
            max_harmonic_order,
            noise_seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.sample_rate.is_finite() || self.sample_rate <= 0.0 {
            return Err(Error::Config(format!(
                "sample_rate must be positive and finite, got {}",
                self.sample_rate
            )));
        }
        if !self.f0.is_finite() || self.f0 <= 0.0 {
            return Err(Error::Config(format!(
                "f0 must be positive and finite, got {}",
                self.f0
            )));
        }
        if self.f0 >= self.sample_rate / 2.0 {
            return Err(Error::Config(format!(
                "f0 must be below the Nyquist frequency: f0 = {} >= {} = sample_rate / 2",
                self.f0,
                self.sample_rate / 2.0
            )));
        }
        if self.num_samples() < 2 {
            return Err(Error::Config(format!(
                "duration * sample_rate must yield at least 2 samples, got {}",
                self.num_samples()
            )));
        }
        if self.max_harmonic_order < 1 {
            return Err(Error::Config("max_harmonic_order must be >= 1".into()));
        }
        Ok(())
    }

    /// Number of samples on the grid `t = k / sample_rate`, `k = 0..⌊duration·fs⌋-1`.
    pub fn num_samples(&self) -> usize {
        (self.duration * self.sample_rate).floor() as usize
    }
}

/// Complex DFT coefficients of a signal.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub bins: Vec<Complex64>,
    /// Frequency step between consecutive bins (Hz).
    pub bin_resolution: f64,
}

impl Spectrum {
    /// Frequency of bin `k` in Hz (unsigned convention, `0..N·res`).
    pub fn bin_frequency(&self, k: usize) -> f64 {
        k as f64 * self.bin_resolution
    }

    /// Magnitudes of the non-negative-frequency bins (`0..=N/2`).
    pub fn half_magnitudes(&self) -> Vec<f64> {
        let half = self.bins.len() / 2 + 1;
        self.bins.iter().take(half).map(|c| c.norm()).collect()
    }
}

/// Pure sine wave at the configured fundamental: `s[k] = sin(2π f0 k / fs)`.
pub fn sine(cfg: &SynthesisConfig) -> Result<Signal> {
    cfg.validate()?;
    let n = cfg.num_samples();
    let samples = (0..n)
        .map(|k| (TAU * cfg.f0 * (k as f64 / cfg.sample_rate)).sin())
        .collect();
    Ok(Signal {
        samples,
        sample_rate: cfg.sample_rate,
        fundamental_hz: Some(cfg.f0),
    })
}

/// Synthesizes the preset at harmonic strength `a ∈ [0, 1]`.
///
/// With `a = 0` the output equals [`sine`] sample-for-sample. With `a = 1`
/// only the preset's harmonic sum and shaped noise remain. Harmonics whose
/// frequency reaches the Nyquist limit are dropped. Shaped noise is
/// rescaled to unit standard deviation before weighting by `a`, so the
/// strength axis is comparable across noise presets; the same seed always
/// reproduces the same signal bit for bit.
pub fn synthesize(preset: WaveformPreset, a: f64, cfg: &SynthesisConfig) -> Result<Signal> {
    cfg.validate()?;
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!(
            "harmonic strength a must lie in [0, 1], got {a}"
        )));
    }
    let n = cfg.num_samples();
    let nyquist = cfg.sample_rate / 2.0;

    // Harmonic orders with nonzero amplitude below Nyquist.
    let harmonics: Vec<(f64, f64)> = (1..=cfg.max_harmonic_order)
        .filter(|&h| (h as f64) * cfg.f0 < nyquist)
        .map(|h| (h as f64, preset.harmonic_amplitude(h)))
        .filter(|&(_, amp)| amp != 0.0)
        .collect();

    let noise = if preset.is_noise() {
        let xi = white_noise(n, cfg.sample_rate, cfg.noise_seed);
        let shaped = shape_noise(&xi, preset)?;
        Some(normalize_std(shaped.samples))
    } else {
        None
    };

    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        let t = k as f64 / cfg.sample_rate;
        let base = (TAU * cfg.f0 * t).sin();
        let mut rich = 0.0;
        for &(h, amp) in &harmonics {
            rich += amp * (TAU * h * cfg.f0 * t).sin();
        }
        if let Some(noise) = &noise {
            rich += noise[k];
        }
        samples.push((1.0 - a) * base + a * rich);
    }
    Ok(Signal {
        samples,
        sample_rate: cfg.sample_rate,
        fundamental_hz: Some(cfg.f0),
    })
}

/// I.i.d. standard-normal noise, reproducible from the seed.
pub fn white_noise(n: usize, sample_rate: f64, seed: u64) -> Signal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = (0..n)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect();
    Signal {
        samples,
        sample_rate,
        fundamental_hz: None,
    }
}

/// Applies the preset's spectral weight to a noise signal:
/// `F⁻¹( B(f) · F(ξ) )`.
///
/// Bins are weighted symmetrically (`B` evaluated on the absolute
/// frequency) so the inverse transform is real up to rounding; the residual
/// imaginary part is discarded. The DC weight of the pink and brown laws is
/// 0 by definition of [`WaveformPreset::noise_weight`].
pub fn shape_noise(xi: &Signal, preset: WaveformPreset) -> Result<Signal> {
    let spectrum = dft(xi)?;
    let n = spectrum.bins.len();
    let bins: Vec<Complex64> = spectrum
        .bins
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            // absolute frequency of bin k: bins above N/2 alias to negative
            // frequencies -(N - k) * res
            let kf = if k <= n / 2 { k } else { n - k };
            c * preset.noise_weight(kf as f64 * spectrum.bin_resolution)
        })
        .collect();
    let shaped = idft_complex(&bins);
    let samples = shaped.iter().map(|c| c.re).collect();
    Signal::new(samples, xi.sample_rate, None)
}

/// Forward discrete Fourier transform, `X[k] = Σ_t x[t] e^{-2πi kt/N}`.
///
/// Direct O(N²) evaluation with a precomputed twiddle table; exact enough
/// and fast enough for the signal lengths used here (≤ a few thousand
/// samples).
pub fn dft(s: &Signal) -> Result<Spectrum> {
    if s.samples.is_empty() {
        return Err(Error::Domain("cannot transform an empty signal".into()));
    }
    let n = s.samples.len();
    let twiddle = twiddle_table(n, -1.0);
    let mut bins = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, &x) in s.samples.iter().enumerate() {
            acc += twiddle[(k * t) % n] * x;
        }
        bins.push(acc);
    }
    Ok(Spectrum {
        bins,
        bin_resolution: s.sample_rate / n as f64,
    })
}

/// Inverse discrete Fourier transform of a spectrum back to a real signal.
///
/// The imaginary residue of the inverse transform is discarded; for
/// spectra with conjugate-symmetric weighting it is at rounding level.
pub fn idft(sp: &Spectrum) -> Result<Signal> {
    if sp.bins.is_empty() {
        return Err(Error::Domain("cannot transform an empty spectrum".into()));
    }
    let vals = idft_complex(&sp.bins);
    let n = sp.bins.len();
    let samples = vals.iter().map(|c| c.re).collect();
    Signal::new(samples, sp.bin_resolution * n as f64, None)
}

fn idft_complex(bins: &[Complex64]) -> Vec<Complex64> {
    let n = bins.len();
    let twiddle = twiddle_table(n, 1.0);
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|t| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &c) in bins.iter().enumerate() {
                acc += twiddle[(k * t) % n] * c;
            }
            acc * scale
        })
        .collect()
}

fn twiddle_table(n: usize, sign: f64) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::from_polar(1.0, sign * TAU * j as f64 / n as f64))
        .collect()
}

/// Rescales to unit population standard deviation after removing nothing:
/// the shaped-noise mean is already ~0 because the DC weight is 0 or the
/// input is zero-mean white noise. All-zero input is returned unchanged.
fn normalize_std(samples: Vec<f64>) -> Vec<f64> {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    let std = var.sqrt();
    if std == 0.0 {
        return samples;
    }
    samples.into_iter().map(|x| x / std).collect()
}
