//! Run manifests: one JSON record per command invocation.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use crate::CliError;

/// Records what a command ran with and what it wrote. Re-running a
/// deterministic command with the recorded parameters reproduces every
/// listed output bitwise.
#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub library_version: String,
    pub parameters: serde_json::Value,
    pub seeds: Vec<u64>,
    pub outputs: Vec<String>,
    pub wall_seconds: f64,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunManifest {
    pub fn start<P: Serialize>(command: &str, parameters: &P) -> Self {
        Self {
            command: command.to_string(),
            library_version: env!("CARGO_PKG_VERSION").to_string(),
            parameters: serde_json::to_value(parameters)
                .unwrap_or(serde_json::Value::Null),
            seeds: Vec::new(),
            outputs: Vec::new(),
            wall_seconds: 0.0,
            started: Some(Instant::now()),
        }
    }

    pub fn seed(&mut self, seed: u64) {
        self.seeds.push(seed);
    }

    pub fn output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    /// Writes `<command>_manifest.json` into `dir` and returns its path.
    pub fn finish(mut self, dir: &Path) -> Result<PathBuf, CliError> {
        if let Some(started) = self.started.take() {
            self.wall_seconds = started.elapsed().as_secs_f64();
        }
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}_manifest.json", self.command));
        let json = serde_json::to_string_pretty(&self)
            .map_err(|e| CliError::validation(format!("manifest serialization: {e}")))?;
        std::fs::write(&path, json)?;
        Ok(path)
    }
}
