use std::time::Instant;
use ttda::sigsynth::{SynthesisConfig, WaveformPreset};
use ttda::timbre::{default_a_grid, default_tau_grid, feature_surface};

fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for k in i..=j {
                r[idx[k]] = avg;
            }
            i = j + 1;
        }
        r
    }
    let rx = ranks(xs);
    let ry = ranks(ys);
    let n = xs.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx) * (a - mx)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my) * (b - my)).sum();
    cov / (vx.sqrt() * vy.sqrt())
}

fn main() {
    let f0 = 150.0;
    let fs = 48_000.0;
    let cfg = SynthesisConfig::new(f0, fs, 0.01, 10, 7).unwrap();
    let a_grid = default_a_grid();
    let tau_grid = default_tau_grid(f0, fs);
    let seeds = [7u64, 8, 9, 10, 11];
    let t0 = Instant::now();
    for preset in WaveformPreset::ALL {
        let t = Instant::now();
        let sweep = feature_surface(preset, &a_grid, &tau_grid, &cfg, &seeds).unwrap();
        let growth = sweep.a_averaged_growth();
        let best = growth
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        let frac = tau_grid[best].fraction.unwrap();
        let col: Vec<f64> = (0..a_grid.len()).map(|i| sweep.m_values[i][best]).collect();
        let rho = spearman(&a_grid, &col);
        println!(
            "{:<18} best tau = {}/{} ({} samples), growth={:.3}, spearman={:.3}, took {:?}",
            preset.name(),
            frac.0,
            frac.1,
            tau_grid[best].samples,
            growth[best],
            rho,
            t.elapsed()
        );
    }
    println!("total sweep time {:?}", t0.elapsed());
}
