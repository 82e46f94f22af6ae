use ttda::ingest::write_wav_f32;
use ttda::sigsynth::{synthesize, SynthesisConfig};

use crate::manifest::RunManifest;
use crate::{CliError, SynthArgs};

use super::{check_strength, parse_preset};

pub fn run(args: &SynthArgs) -> Result<i32, CliError> {
    let preset = parse_preset(&args.preset)?;
    check_strength(args.a)?;
    let cfg = SynthesisConfig::new(args.f0, args.fs, args.dur, args.max_harmonic, args.seed)?;
    let mut manifest = RunManifest::start("synth", args);
    manifest.seed(args.seed);

    let signal = synthesize(preset, args.a, &cfg)?;
    if let Some(parent) = args.out.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    write_wav_f32(&args.out, &signal)?;
    manifest.output(&args.out);

    let dir = args
        .out
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map(|p| p.to_path_buf())
        .unwrap_or_else(|| std::path::PathBuf::from("."));
    manifest.finish(&dir)?;
    println!(
        "wrote {} ({} samples at {} Hz)",
        args.out.display(),
        signal.len(),
        args.fs
    );
    Ok(0)
}
