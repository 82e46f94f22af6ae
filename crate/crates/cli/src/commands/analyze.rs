use std::f64::consts::TAU;
use std::fs::File;
use std::io::{BufWriter, Write};

use serde_json::json;

use ttda::embed::{delay_embed, delay_from_period, distance_matrix, EmbeddingConfig};
use ttda::homology::rips_persistence;
use ttda::ingest::{extract_segment, load_wav, normalize_peak};
use ttda::sigsynth::{dft, sine, synthesize, Signal, SynthesisConfig};
use ttda::wasserstein::diagram_distance;

use crate::manifest::RunManifest;
use crate::{svg, AnalyzeArgs, CliError};

use super::{check_strength, parse_preset};

pub fn run(args: &AnalyzeArgs) -> Result<i32, CliError> {
    let mut manifest = RunManifest::start("analyze", args);
    let signal = build_signal(args, &mut manifest)?;
    let tau = resolve_tau(args, signal.sample_rate)?;

    std::fs::create_dir_all(&args.out_dir)?;

    // the four per-figure artifacts: waveform, spectrum, embedding, diagram
    let waveform_path = args.out_dir.join("waveform.csv");
    {
        let mut w = BufWriter::new(File::create(&waveform_path)?);
        writeln!(w, "t,amplitude")?;
        for (k, &x) in signal.samples.iter().enumerate() {
            writeln!(w, "{},{}", k as f64 / signal.sample_rate, x)?;
        }
    }
    manifest.output(&waveform_path);

    let spectrum_path = args.out_dir.join("spectrum.csv");
    let spectrum = dft(&signal)?;
    {
        let mut w = BufWriter::new(File::create(&spectrum_path)?);
        writeln!(w, "freq_hz,magnitude")?;
        for (k, mag) in spectrum.half_magnitudes().iter().enumerate() {
            writeln!(w, "{},{}", spectrum.bin_frequency(k), mag)?;
        }
    }
    manifest.output(&spectrum_path);

    let embed_cfg = EmbeddingConfig::with_stride(2, tau, args.stride)?;
    let cloud = delay_embed(&signal, &embed_cfg)?;
    let embedding_path = args.out_dir.join("embedding.csv");
    {
        let mut w = BufWriter::new(File::create(&embedding_path)?);
        writeln!(w, "x0,x1")?;
        for p in cloud.iter() {
            writeln!(w, "{},{}", p[0], p[1])?;
        }
    }
    manifest.output(&embedding_path);

    // raw diagram export keeps dims 0 and 1 with essential classes
    let full = rips_persistence(&distance_matrix(&cloud), None)?;
    let diagram = full.restrict_finite(1);
    let diagram_path = args.out_dir.join("diagram.csv");
    full.write_csv(BufWriter::new(File::create(&diagram_path)?))?;
    manifest.output(&diagram_path);

    // m against a same-length pure sine, embedded identically
    let reference = sine_like(&signal, args.f0)?;
    let reference_cloud = delay_embed(&reference, &embed_cfg)?;
    let reference_diagram =
        rips_persistence(&distance_matrix(&reference_cloud), None)?.restrict_finite(1);
    let m = diagram_distance(&reference_diagram, &diagram)?;
    let feature_path = args.out_dir.join("feature.json");
    let feature_json = json!({
        "m": m,
        "tau_samples": tau,
        "tau_seconds": tau as f64 / signal.sample_rate,
        "stride": args.stride,
        "f0": args.f0,
        "sample_rate": signal.sample_rate,
        "signal_samples": signal.len(),
        "embedding_points": cloud.len(),
        "dim1_features": diagram.len(),
        "library_version": env!("CARGO_PKG_VERSION"),
    });
    std::fs::write(&feature_path, serde_json::to_string_pretty(&feature_json).unwrap())?;
    manifest.output(&feature_path);

    if args.svg {
        let embedding_svg = args.out_dir.join("embedding.svg");
        let pts: Vec<(f64, f64)> = cloud.iter().map(|p| (p[0], p[1])).collect();
        svg::scatter(&embedding_svg, &pts, "delay embedding", false)?;
        manifest.output(&embedding_svg);

        let diagram_svg = args.out_dir.join("diagram.svg");
        let pts: Vec<(f64, f64)> = diagram
            .features()
            .iter()
            .map(|f| (f.birth, f.death))
            .collect();
        svg::scatter(&diagram_svg, &pts, "persistence diagram (dim 1)", true)?;
        manifest.output(&diagram_svg);
    }

    manifest.finish(&args.out_dir)?;
    println!("{m}");
    Ok(0)
}

fn sine_like(signal: &Signal, f0: f64) -> Result<Signal, CliError> {
    Ok(Signal::new(
        (0..signal.len())
            .map(|k| (TAU * f0 * (k as f64 / signal.sample_rate)).sin())
            .collect(),
        signal.sample_rate,
        Some(f0),
    )?)
}

fn build_signal(args: &AnalyzeArgs, manifest: &mut RunManifest) -> Result<Signal, CliError> {
    if args.f0.is_nan() || args.f0 <= 0.0 {
        return Err(CliError::validation(format!(
            "--f0: fundamental frequency must be positive, got {}",
            args.f0
        )));
    }
    let signal = if let Some(path) = &args.wav {
        load_wav(path)?
    } else if let Some(name) = &args.preset {
        let preset = parse_preset(name)?;
        check_strength(args.a)?;
        manifest.seed(args.seed);
        let cfg =
            SynthesisConfig::new(args.f0, args.fs, args.dur, args.max_harmonic, args.seed)?;
        synthesize(preset, args.a, &cfg)?
    } else if !args.partial.is_empty() {
        let cfg =
            SynthesisConfig::new(args.f0, args.fs, args.dur, args.max_harmonic, args.seed)?;
        let mut samples = sine(&cfg)?.samples;
        for spec in &args.partial {
            let (mult, amp) = parse_partial(spec)?;
            for (k, x) in samples.iter_mut().enumerate() {
                let t = k as f64 / args.fs;
                *x += amp * (TAU * mult * args.f0 * t).sin();
            }
        }
        Signal::new(samples, args.fs, Some(args.f0))?
    } else {
        let cfg =
            SynthesisConfig::new(args.f0, args.fs, args.dur, args.max_harmonic, args.seed)?;
        sine(&cfg)?
    };

    if let Some(periods) = args.segment_periods {
        let segment = extract_segment(&signal, args.f0, periods, args.fallback)?;
        Ok(normalize_peak(&segment)?)
    } else {
        Ok(signal)
    }
}

fn parse_partial(spec: &str) -> Result<(f64, f64), CliError> {
    let err = || {
        CliError::validation(format!(
            "--partial: expected MULT:AMP (e.g. 2.0:0.7), got {spec:?}"
        ))
    };
    let (mult, amp) = spec.split_once(':').ok_or_else(err)?;
    let mult: f64 = mult.trim().parse().map_err(|_| err())?;
    let amp: f64 = amp.trim().parse().map_err(|_| err())?;
    if mult.is_nan() || mult <= 0.0 || !amp.is_finite() {
        return Err(err());
    }
    Ok((mult, amp))
}

fn resolve_tau(args: &AnalyzeArgs, sample_rate: f64) -> Result<usize, CliError> {
    match (&args.tau_ms, &args.tau_samples, &args.tau_frac) {
        (Some(ms), None, None) => {
            let tau = (ms / 1000.0 * sample_rate).round();
            if tau < 1.0 {
                return Err(CliError::validation(format!(
                    "--tau-ms: {ms} ms rounds to zero samples at {sample_rate} Hz"
                )));
            }
            Ok(tau as usize)
        }
        (None, Some(samples), None) => {
            if *samples == 0 {
                return Err(CliError::validation("--tau-samples: delay must be >= 1"));
            }
            Ok(*samples)
        }
        (None, None, Some(frac)) => {
            let err = || {
                CliError::validation(format!(
                    "--tau-frac: expected P/Q (e.g. 1/2), got {frac:?}"
                ))
            };
            let (p, q) = frac.split_once('/').ok_or_else(err)?;
            let p: u32 = p.trim().parse().map_err(|_| err())?;
            let q: u32 = q.trim().parse().map_err(|_| err())?;
            Ok(delay_from_period(args.f0, (p, q), sample_rate)?)
        }
        _ => Err(CliError::validation(
            "exactly one of --tau-ms, --tau-samples, --tau-frac is required",
        )),
    }
}
