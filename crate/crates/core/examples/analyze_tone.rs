//! Minimal end-to-end use of the library: synthesize a harmonic signal,
//! embed it, and score its timbre against a pure sine.
//!
//! Run with `cargo run --release -p ttda --example analyze_tone`.

use std::time::Instant;

use ttda::embed::delay_from_period;
use ttda::sigsynth::{synthesize, SynthesisConfig, WaveformPreset};
use ttda::timbre::timbre_feature;

fn main() {
    let f0 = 150.0;
    let fs = 48_000.0;
    let cfg = SynthesisConfig::new(f0, fs, 2.0 / f0, 10, 7).unwrap();

    for preset in WaveformPreset::ALL {
        let signal = synthesize(preset, 1.0, &cfg).unwrap();
        let started = Instant::now();
        let mut line = format!("{:<18}", preset.name());
        for fraction in [(1u32, 4u32), (1, 2)] {
            let tau = delay_from_period(f0, fraction, fs).unwrap();
            let feature = timbre_feature(&signal, f0, tau).unwrap();
            line.push_str(&format!(
                "  m(T0*{}/{}) = {:.4}",
                fraction.0, fraction.1, feature.value
            ));
        }
        println!("{line}   [{:?}]", started.elapsed());
    }
}
