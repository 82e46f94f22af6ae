use std::fs::File;
use std::io::BufWriter;

use ttda::sigsynth::{SynthesisConfig, WaveformPreset};
use ttda::timbre::{default_tau_grid, feature_surface};

use crate::manifest::RunManifest;
use crate::{thread_pool, CliError, SweepArgs};

use super::parse_preset;

pub fn run(args: &SweepArgs) -> Result<i32, CliError> {
    let presets: Vec<WaveformPreset> = if args.all {
        WaveformPreset::ALL.to_vec()
    } else if args.preset.is_empty() {
        return Err(CliError::validation(
            "--preset: name at least one preset or pass --all",
        ));
    } else {
        args.preset
            .iter()
            .map(|name| parse_preset(name))
            .collect::<Result<_, _>>()?
    };
    if args.a_steps == 0 {
        return Err(CliError::validation("--a-steps: must be >= 1"));
    }
    if args.tau_divisions == 0 {
        return Err(CliError::validation("--tau-divisions: must be >= 1"));
    }

    let mut manifest = RunManifest::start("sweep", args);
    let cfg = SynthesisConfig::new(args.f0, args.fs, 0.02, args.max_harmonic, args.seed)?;
    let a_grid: Vec<f64> = (0..=args.a_steps)
        .map(|i| i as f64 / args.a_steps as f64)
        .collect();
    let tau_grid = if args.tau_divisions == 32 {
        default_tau_grid(args.f0, args.fs)
    } else {
        (1..=args.tau_divisions)
            .filter_map(|k| {
                ttda::embed::delay_from_period(args.f0, (k, args.tau_divisions), args.fs)
                    .ok()
                    .map(|samples| ttda::timbre::TauSpec {
                        samples,
                        fraction: Some((k, args.tau_divisions)),
                    })
            })
            .collect()
    };
    if tau_grid.is_empty() {
        return Err(CliError::validation(
            "--tau-divisions: every period fraction rounds to zero samples",
        ));
    }
    let seeds: Vec<u64> = (0..args.seeds.max(1)).map(|i| args.seed + i).collect();
    for &s in &seeds {
        manifest.seed(s);
    }

    std::fs::create_dir_all(&args.out_dir)?;
    let pool = thread_pool(args.jobs)?;
    for preset in presets {
        let sweep =
            pool.install(|| feature_surface(preset, &a_grid, &tau_grid, &cfg, &seeds))?;

        let csv_path = args.out_dir.join(format!("sweep_{}.csv", preset.name()));
        sweep.write_csv(BufWriter::new(File::create(&csv_path)?))?;
        manifest.output(&csv_path);

        let json_path = args.out_dir.join(format!("sweep_{}.json", preset.name()));
        let json = serde_json::to_string_pretty(&sweep)
            .map_err(|e| CliError::validation(format!("sweep serialization: {e}")))?;
        std::fs::write(&json_path, json)?;
        manifest.output(&json_path);

        println!("{}: wrote {} and {}", preset.name(), csv_path.display(), json_path.display());
    }

    manifest.finish(&args.out_dir)?;
    Ok(0)
}
