//! Loading real recordings and extracting the analysis segment.
//!
//! The protocol for a one-shot instrument note: decode the WAV to a mono
//! signal in [-1, 1], locate the global absolute-amplitude maximum, take a
//! window of a whole number of fundamental periods starting there, and
//! peak-normalize the window before embedding.

use std::path::Path;

use hound::{SampleFormat, WavReader, WavSpec, WavWriter};

use crate::sigsynth::Signal;
use crate::{Error, Result};

/// A decoded recording: the mono analysis signal plus file provenance.
#[derive(Debug, Clone)]
pub struct AudioFile {
    pub path: std::path::PathBuf,
    /// Mono signal at the header sample rate, normalized to [-1, 1].
    pub signal: Signal,
    /// Channel count of the original file (the signal is always mono).
    pub channels: u16,
}

impl AudioFile {
    pub fn load<P: AsRef<Path>>(path: P) -> Result<Self> {
        let (signal, channels) = decode_wav(&path)?;
        Ok(Self {
            path: path.as_ref().to_path_buf(),
            signal,
            channels,
        })
    }
}

/// Decodes a PCM WAV file (8/16/24/32-bit integer or 32-bit float) to a
/// mono signal normalized to [-1, 1] by the format's full-scale value.
/// Multi-channel input is averaged down to one channel.
pub fn load_wav<P: AsRef<Path>>(path: P) -> Result<Signal> {
    decode_wav(&path).map(|(signal, _)| signal)
}

fn decode_wav<P: AsRef<Path>>(path: P) -> Result<(Signal, u16)> {
    let mut reader = WavReader::open(&path)?;
    let spec = reader.spec();
    let channels = spec.channels as usize;
    if channels == 0 {
        return Err(Error::Format("WAV header declares zero channels".into()));
    }

    let interleaved: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
        (SampleFormat::Float, 32) => reader
            .samples::<f32>()
            .map(|s| s.map(|x| x as f64))
            .collect::<std::result::Result<_, _>>()?,
        (SampleFormat::Int, bits @ (8 | 16 | 24 | 32)) => {
            let full_scale = (1i64 << (bits - 1)) as f64;
            reader
                .samples::<i32>()
                .map(|s| s.map(|x| x as f64 / full_scale))
                .collect::<std::result::Result<_, _>>()?
        }
        (fmt, bits) => {
            return Err(Error::Format(format!(
                "unsupported WAV data chunk: {bits}-bit {fmt:?} samples"
            )))
        }
    };

    if interleaved.is_empty() {
        return Err(Error::Format("WAV file contains no samples".into()));
    }

    let samples: Vec<f64> = if channels == 1 {
        interleaved
    } else {
        interleaved
            .chunks(channels)
            .map(|frame| frame.iter().sum::<f64>() / frame.len() as f64)
            .collect()
    };

    Ok((
        Signal::new(samples, spec.sample_rate as f64, None)?,
        spec.channels,
    ))
}

/// Writes a signal as a 32-bit float WAV file.
pub fn write_wav_f32<P: AsRef<Path>>(path: P, signal: &Signal) -> Result<()> {
    let spec = WavSpec {
        channels: 1,
        sample_rate: signal.sample_rate.round() as u32,
        bits_per_sample: 32,
        sample_format: SampleFormat::Float,
    };
    let mut writer = WavWriter::create(path, spec)?;
    for &x in &signal.samples {
        writer.write_sample(x as f32)?;
    }
    writer.finalize()?;
    Ok(())
}

/// Extracts the analysis window: `⌊periods · fs / f0⌋` samples starting at
/// the earliest global maximum of `|s|`.
///
/// With `fallback = false` a window that would overrun the end of the
/// signal is an error reporting the available tail; with `fallback = true`
/// the window is shifted left so it ends at the last sample.
pub fn extract_segment(s: &Signal, f0: f64, periods: u32, fallback: bool) -> Result<Signal> {
    if f0.is_nan() || f0 <= 0.0 {
        return Err(Error::Domain(format!("f0 must be positive, got {f0}")));
    }
    if periods == 0 {
        return Err(Error::Domain("periods must be >= 1".into()));
    }
    let window = (periods as f64 * s.sample_rate / f0).floor() as usize;
    if window == 0 || window > s.len() {
        return Err(Error::Extraction {
            start: 0,
            requested: window,
            available: s.len(),
        });
    }
    // earliest index attaining the absolute maximum
    let start = s
        .samples
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.abs().total_cmp(&b.abs()).then(j.cmp(i)))
        .map(|(i, _)| i)
        .unwrap();
    let start = if start + window <= s.len() {
        start
    } else if fallback {
        s.len() - window
    } else {
        return Err(Error::Extraction {
            start,
            requested: window,
            available: s.len() - start,
        });
    };
    Signal::new(
        s.samples[start..start + window].to_vec(),
        s.sample_rate,
        Some(f0),
    )
}

/// Rescales so the absolute peak is exactly 1, preserving shape.
pub fn normalize_peak(s: &Signal) -> Result<Signal> {
    let peak = s.samples.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if peak == 0.0 {
        return Err(Error::DegenerateInput(
            "cannot peak-normalize an all-zero signal".into(),
        ));
    }
    Signal::new(
        s.samples.iter().map(|x| x / peak).collect(),
        s.sample_rate,
        s.fundamental_hz,
    )
}
