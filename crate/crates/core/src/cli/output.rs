//! Output schema of the command-line tool.
//!
//! CSV files carry a fixed header and get a `<file>.manifest.json` sidecar;
//! JSON documents embed the manifest under `"manifest"`. Floats are written
//! in shortest round-trip form. Bump [`SCHEMA_VERSION`] whenever a column or
//! key changes.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use chrono::{DateTime, SecondsFormat, Utc};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::EigenvalueRecord;
use crate::zeta::CountingSample;

pub const SCHEMA_VERSION: &str = "1";

pub const EIGENVALUE_HEADER: [&str; 4] = ["index", "energy", "residual", "variant"];
pub const COUNTING_HEADER: [&str; 5] = ["energy", "n_model", "n_smooth", "s_fluct", "n_table"];

/// Provenance of one run. `parameters` echoes every input, `derived` holds
/// run-level results that are not per-row (fitted cutoff, summaries).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub derived: BTreeMap<String, String>,
    pub tool_version: String,
    pub timestamp: String,
    pub schema_version: String,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            derived: BTreeMap::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: timestamp(),
            schema_version: SCHEMA_VERSION.to_string(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn derive(&mut self, key: &str, value: impl ToString) {
        self.derived.insert(key.to_string(), value.to_string());
    }
}

/// UTC time of the run; honours `SOURCE_DATE_EPOCH` for reproducible builds
/// of the output files.
fn timestamp() -> String {
    let pinned = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse::<i64>().ok())
        .and_then(|secs| DateTime::<Utc>::from_timestamp(secs, 0));
    pinned
        .unwrap_or_else(Utc::now)
        .to_rfc3339_opts(SecondsFormat::Secs, true)
}

/// Shortest decimal string that parses back to the same `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

pub fn eigenvalues_csv(records: &[EigenvalueRecord]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(EIGENVALUE_HEADER).map_err(csv_error)?;
    for r in records {
        w.write_record([
            r.index.to_string(),
            fmt_f64(r.energy),
            fmt_f64(r.residual),
            r.method.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

pub fn counting_csv(samples: &[CountingSample]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COUNTING_HEADER).map_err(csv_error)?;
    for s in samples {
        w.write_record([
            fmt_f64(s.energy),
            fmt_f64(s.n_model),
            fmt_f64(s.n_smooth),
            fmt_f64(s.s_fluct),
            s.n_table.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn json_bytes<T: Serialize>(doc: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(doc).map_err(|e| Error::Io(e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Path of the manifest that accompanies a CSV file.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// Writes a CSV body to `out` (plus sidecar manifest) or to stdout.
pub fn emit_csv(body: &[u8], manifest: &RunManifest, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            write_file(path, body)?;
            write_file(&sidecar_path(path), &json_bytes(manifest)?)
        }
        None => write_stdout(body),
    }
}

/// Writes a JSON document to `out` or to stdout.
pub fn emit_json<T: Serialize>(doc: &T, out: Option<&Path>) -> Result<()> {
    let bytes = json_bytes(doc)?;
    match out {
        Some(path) => write_file(path, &bytes),
        None => write_stdout(&bytes),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

fn write_stdout(bytes: &[u8]) -> Result<()> {
    let mut stdout = io::stdout().lock();
    stdout.write_all(bytes)?;
    stdout.flush()?;
    Ok(())
}
