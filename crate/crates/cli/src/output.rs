use std::fmt;
use std::fs;
use std::io::{self, Write};

use num_bigint::BigUint;
use serde_json::Value;

use crate::{Format, Options};

#[derive(Debug)]
pub enum CliError {
    Core(z4uk::Error),
    Io(String, io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => e.exit_code() as u8,
            CliError::Io(..) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl From<z4uk::Error> for CliError {
    fn from(e: z4uk::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

pub fn big(v: &BigUint) -> Value {
    serde_json::from_str(&v.to_string()).unwrap_or_else(|_| Value::String(v.to_string()))
}

/// Writes a line to stdout, ignoring a closed pipe.
pub fn say(line: impl fmt::Display) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

/// A tabular result: JSON value plus CSV header and rows.
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn write(&self, opts: &Options) -> CliResult {
        let Some(path) = &opts.out else {
            return Ok(());
        };
        let text = match opts.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).unwrap_or_default();
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                if !self.header.is_empty() {
                    s.push_str(&self.header.join(","));
                    s.push('\n');
                }
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
        };
        fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

pub fn digits(v: &[u8]) -> String {
    v.iter().map(|d| char::from(b'0' + d)).collect()
}
