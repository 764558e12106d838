use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use polyhull::enumeration::size_guard;
use polyhull::hexgrid::HEX_GUARD;
use serde::Serialize;

/// One per run, written as `<out>/<command>.manifest.json`.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub guards: Guards,
    pub wall_time_ms: u128,
    pub exit_code: u8,
    pub result: String,
    pub artifacts: Vec<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Guards {
    pub max_n_2d: usize,
    pub max_n_3d: usize,
    pub max_n_4d: usize,
    pub max_n_hex: usize,
}

impl Guards {
    pub fn current() -> Self {
        Guards {
            max_n_2d: size_guard(2).unwrap_or(0),
            max_n_3d: size_guard(3).unwrap_or(0),
            max_n_4d: size_guard(4).unwrap_or(0),
            max_n_hex: HEX_GUARD,
        }
    }
}

impl RunManifest {
    pub fn new(command: &str, parameters: serde_json::Value, elapsed: Duration) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters,
            guards: Guards::current(),
            wall_time_ms: elapsed.as_millis(),
            exit_code: 0,
            result: String::new(),
            artifacts: Vec::new(),
        }
    }

    pub fn write(&self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join(format!("{}.manifest.json", self.command));
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(path)
    }
}
