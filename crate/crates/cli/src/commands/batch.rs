use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;

use ttda::ingest::{extract_segment, load_wav, normalize_peak};
use ttda::timbre::real_signal_features;

use crate::manifest::RunManifest;
use crate::{thread_pool, BatchArgs, CliError};

struct FileRow {
    file: String,
    category: String,
    m_half: f64,
    m_quarter: f64,
}

pub fn run(args: &BatchArgs) -> Result<i32, CliError> {
    let mut manifest = RunManifest::start("batch", args);
    let metadata = read_metadata(args)?;
    if metadata.is_empty() {
        return Err(CliError::validation(format!(
            "metadata {} maps no files to categories",
            args.metadata.display()
        )));
    }

    // analysis set = metadata entries with an existing audio file
    let jobs: Vec<(String, String, PathBuf)> = metadata
        .iter()
        .map(|(file, category)| (file.clone(), category.clone(), args.audio_dir.join(file)))
        .collect();
    if !args.audio_dir.is_dir() {
        return Err(CliError::validation(format!(
            "--audio-dir: {} is not a directory",
            args.audio_dir.display()
        )));
    }
    if std::fs::read_dir(&args.audio_dir)?.next().is_none() {
        return Err(CliError::validation(format!(
            "--audio-dir: {} contains no files",
            args.audio_dir.display()
        )));
    }

    let pool = thread_pool(args.jobs)?;
    let results: Vec<Result<FileRow, (String, String)>> = pool.install(|| {
        jobs.par_iter()
            .map(|(file, category, path)| {
                let analyze = || -> Result<FileRow, CliError> {
                    let signal = load_wav(path)?;
                    let segment =
                        extract_segment(&signal, args.f0, args.periods, args.fallback)?;
                    let segment = normalize_peak(&segment)?;
                    let (half, quarter) = real_signal_features(&segment, args.f0)?;
                    Ok(FileRow {
                        file: file.clone(),
                        category: category.clone(),
                        m_half: half.value,
                        m_quarter: quarter.value,
                    })
                };
                analyze().map_err(|e| (file.clone(), e.message))
            })
            .collect()
    });

    let mut rows = Vec::new();
    let mut failures = 0usize;
    for result in results {
        match result {
            Ok(row) => rows.push(row),
            Err((file, message)) => {
                failures += 1;
                eprintln!("skipping {file}: {message}");
            }
        }
    }
    if rows.is_empty() {
        return Err(CliError {
            code: 1,
            message: format!("no analyzable files among {} metadata entries", jobs.len()),
        });
    }
    rows.sort_by(|a, b| a.file.cmp(&b.file));

    std::fs::create_dir_all(&args.out_dir)?;
    let features_path = args.out_dir.join("features.csv");
    {
        let mut w = BufWriter::new(File::create(&features_path)?);
        writeln!(w, "file,category,m_half,m_quarter")?;
        for row in &rows {
            writeln!(w, "{},{},{},{}", row.file, row.category, row.m_half, row.m_quarter)?;
        }
    }
    manifest.output(&features_path);

    let summary_path = args.out_dir.join("summary.csv");
    {
        let mut by_category: BTreeMap<&str, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
        for row in &rows {
            let entry = by_category.entry(&row.category).or_default();
            entry.0.push(row.m_half);
            entry.1.push(row.m_quarter);
        }
        let mut w = BufWriter::new(File::create(&summary_path)?);
        writeln!(
            w,
            "category,count,m_half_q1,m_half_median,m_half_q3,m_quarter_q1,m_quarter_median,m_quarter_q3"
        )?;
        for (category, (mut half, mut quarter)) in by_category {
            half.sort_by(f64::total_cmp);
            quarter.sort_by(f64::total_cmp);
            writeln!(
                w,
                "{},{},{},{},{},{},{},{}",
                category,
                half.len(),
                percentile(&half, 0.25),
                percentile(&half, 0.5),
                percentile(&half, 0.75),
                percentile(&quarter, 0.25),
                percentile(&quarter, 0.5),
                percentile(&quarter, 0.75),
            )?;
        }
    }
    manifest.output(&summary_path);
    manifest.finish(&args.out_dir)?;

    println!(
        "analyzed {} files ({} skipped); wrote {} and {}",
        rows.len(),
        failures,
        features_path.display(),
        summary_path.display()
    );
    Ok(if failures > 0 { 4 } else { 0 })
}

/// Metadata is a JSON object mapping file names either directly to a
/// category string or to an object carrying the category under
/// `--category-key`. Keys without an extension get `.wav` appended.
fn read_metadata(args: &BatchArgs) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(&args.metadata)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::validation(format!("metadata JSON: {e}")))?;
    let object = value.as_object().ok_or_else(|| {
        CliError::validation("metadata JSON must be an object mapping files to categories")
    })?;
    let mut map = BTreeMap::new();
    for (key, entry) in object {
        let category = match entry {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Object(fields) => fields
                .get(&args.category_key)
                .and_then(|v| v.as_str())
                .ok_or_else(|| {
                    CliError::validation(format!(
                        "metadata entry {key:?} has no string field {:?}",
                        args.category_key
                    ))
                })?
                .to_string(),
            _ => {
                return Err(CliError::validation(format!(
                    "metadata entry {key:?} must be a string or an object"
                )))
            }
        };
        let file = if key.contains('.') {
            key.clone()
        } else {
            format!("{key}.wav")
        };
        map.insert(file, category);
    }
    Ok(map)
}

/// Linear-interpolation percentile of a sorted slice.
fn percentile(sorted: &[f64], p: f64) -> f64 {
    if sorted.len() == 1 {
        return sorted[0];
    }
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}
