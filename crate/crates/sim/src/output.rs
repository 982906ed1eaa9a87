//! CSV and JSON serialization of sweep results, written atomically.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use cavmag_core::SweepResult;

use crate::config::Format;
use crate::error::{CliError, Result};

/// Seventeen significant digits, enough to round-trip any `f64`.
fn float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Header of axis names, quantity names and `stable`; one LF-terminated row
/// per grid point. Unstable points leave their quantity fields empty.
pub fn to_csv(result: &SweepResult) -> String {
    let mut out = result.columns.join(",");
    out.push('\n');
    for row in &result.rows {
        let fields = row
            .axes
            .iter()
            .map(|&a| float(a))
            .chain(row.values.iter().map(|v| v.map(float).unwrap_or_default()))
            .chain(std::iter::once(row.stable.to_string()));
        let line = fields.collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "{line}");
    }
    out
}

/// `{spec, columns, rows}` object.
pub fn to_json(result: &SweepResult) -> String {
    let mut s = serde_json::to_string_pretty(result).expect("sweep results contain only finite numbers");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<SweepResult> {
    serde_json::from_str(text)
}

pub fn render(result: &SweepResult, format: Format) -> String {
    match format {
        Format::Csv => to_csv(result),
        Format::Json => to_json(result),
    }
}

/// Format from an explicit choice, else the file extension, else CSV.
pub fn resolve_format(explicit: Option<Format>, path: Option<&Path>) -> Format {
    explicit
        .or_else(|| {
            path.and_then(|p| p.extension())
                .and_then(|e| e.to_str())
                .and_then(|e| e.parse().ok())
        })
        .unwrap_or(Format::Csv)
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(contents).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}
