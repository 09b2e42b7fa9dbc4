//! Report documents and CSV series on disk.

use std::io::Write;
use std::path::Path;

use holoseq_core::{Check, Verdict};
use serde::Serialize;

use crate::experiments::Series;
use crate::CliError;

pub const SCHEMA: &str = "holoseq.report/1";

/// Top-level JSON document. Field order is fixed so that two runs differ
/// only in `timestamp`.
#[derive(Debug, Serialize)]
pub struct Document<'a> {
    pub schema: &'static str,
    pub experiment: &'a str,
    pub claim: &'a str,
    pub verdict: Verdict,
    pub config: serde_json::Value,
    pub measurements: &'a serde_json::Value,
    pub checks: &'a [Check],
    pub version: &'static str,
    pub timestamp: String,
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Fails when `path` exists and overwriting was not requested.
pub fn check_writable(path: Option<&Path>, force: bool) -> Result<(), CliError> {
    match path {
        Some(p) if p.exists() && !force => Err(CliError::Usage(format!(
            "{} already exists; pass --force to overwrite",
            p.display()
        ))),
        _ => Ok(()),
    }
}

pub fn write_json(doc: &Document<'_>, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Writes the header even when there are no rows.
pub fn write_csv(series: &Series, path: &Path) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(&series.headers)?;
    for row in &series.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
