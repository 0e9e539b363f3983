//! Reproducible experiment reports: deterministic body, wall clock outside.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use stokes_core::{Error, Result};

/// The deterministic part of a report: identical configuration yields a
/// byte-identical body.
#[derive(Serialize)]
pub struct ReportBody {
    pub version: String,
    pub command: Vec<String>,
    /// input path -> sha256 of the file bytes
    pub inputs: BTreeMap<String, String>,
    pub result: serde_json::Value,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct Report {
    pub body: ReportBody,
    pub wall_clock_ms: u128,
}

impl ReportBody {
    pub fn new(command: Vec<String>, result: serde_json::Value, pass: bool) -> ReportBody {
        ReportBody {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            inputs: BTreeMap::new(),
            result,
            pass,
        }
    }
}

/// Reads a file and records its digest.
pub fn read_input(path: &Path, inputs: &mut BTreeMap<String, String>) -> Result<String> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    let digest = hasher.finalize();
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    inputs.insert(path.display().to_string(), hex);
    String::from_utf8(bytes)
        .map_err(|_| Error::Parse(format!("{} is not valid UTF-8", path.display())))
}

/// Process exit code for an error, per the documented table.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 3,
        Error::SizeExceeded { .. } => 4,
        _ => 5,
    }
}
