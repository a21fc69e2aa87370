//! Exit codes, number formatting, and JSON/CSV emission.

use std::fmt;
use std::path::{Path, PathBuf};

use anyon_core::{CMatrix, Error};
use num_complex::Complex64;
use serde_json::{json, Value};

pub const OUTPUT_DIR_ENV: &str = "ANYON_OUTPUT_DIR";

#[derive(Debug)]
pub enum CliError {
    /// Bad usage, unreadable input, or unparseable data. Exit 1.
    Usage(String),
    /// A validation or physics check failed. Exit 2.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failure(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::Structural(_)
            | Error::Parse(_)
            | Error::UnknownPath { .. }
            | Error::MissingFusionOps(_)
            | Error::MissingCell(..)
            | Error::ResourceLimit(_)
            | Error::DimensionMismatch { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("I/O error: {e}"))
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

/// Drops the sign of negative zero so identical values print identically.
pub fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Twelve decimals, with values that round to zero printed unsigned.
pub fn fixed(x: f64) -> String {
    let s = format!("{:.12}", clean(x));
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

pub fn complex_json(z: Complex64) -> Value {
    json!([clean(z.re), clean(z.im)])
}

pub fn matrix_json(m: &CMatrix<f64>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|z| complex_json(*z)).collect()))
            .collect(),
    )
}

/// CSV with a header of labels and one row per label. Entries are real
/// numbers when the whole matrix is real, otherwise `re+imi`.
pub fn matrix_csv(labels: &[String], m: &CMatrix<f64>) -> CliResult<String> {
    let real = (0..m.rows()).all(|i| m.row(i).iter().all(|z| z.im.abs() < 1e-12));
    let cell = |z: &Complex64| {
        if real {
            format!("{}", clean(z.re))
        } else {
            format!("{}{:+}i", clean(z.re), clean(z.im))
        }
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<&str> = std::iter::once("").chain(labels.iter().map(String::as_str)).collect();
    w.write_record(&header).map_err(|e| CliError::Usage(e.to_string()))?;
    for (i, label) in labels.iter().enumerate() {
        let row: Vec<String> = std::iter::once(label.clone()).chain(m.row(i).iter().map(cell)).collect();
        w.write_record(&row).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}

/// Pretty JSON with lexicographically sorted keys and a trailing newline.
pub fn to_json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

/// Where to write a result: `ANYON_OUTPUT_DIR` (if set) overrides the directory of
/// `--output`, or supplies one for `default_name` when `--output` is absent.
pub fn output_target(output: Option<&Path>, default_name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty()).map(PathBuf::from);
    match (dir, output) {
        (Some(dir), Some(p)) => Some(dir.join(p.file_name().unwrap_or(p.as_os_str()))),
        (Some(dir), None) => Some(dir.join(default_name)),
        (None, Some(p)) => Some(p.to_path_buf()),
        (None, None) => None,
    }
}

pub fn write_output(target: Option<PathBuf>, text: &str) -> CliResult {
    if let Some(path) = target {
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, text)?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
