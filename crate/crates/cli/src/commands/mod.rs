pub mod analyze;
pub mod batch;
pub mod betti;
pub mod sweep;
pub mod synth;

use crate::CliError;
use ttda::sigsynth::WaveformPreset;

pub fn parse_preset(name: &str) -> Result<WaveformPreset, CliError> {
    WaveformPreset::from_name(name).ok_or_else(|| {
        CliError::validation(format!(
            "--preset: unknown preset {name:?}; valid presets are {}",
            WaveformPreset::ALL
                .iter()
                .map(|p| p.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

pub fn check_strength(a: f64) -> Result<(), CliError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(CliError::validation(format!(
            "--a: harmonic strength {a} outside the valid range [0, 1]"
        )));
    }
    Ok(())
}
