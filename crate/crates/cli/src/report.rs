use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use liesheaf::Error;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    /// Malformed or missing input.
    Input(String),
    /// A mathematical precondition failed.
    Math(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Input(m) => f.write_str(m),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Math(e)
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

/// Text lines plus the structured mirror.
pub struct Report {
    lines: Vec<String>,
    data: Value,
}

impl Report {
    pub fn new(data: impl Serialize) -> Self {
        Report { lines: Vec::new(), data: serde_json::to_value(data).expect("report data serializes") }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    /// Write errors (a closed pipe) are ignored.
    pub fn print(&self, structured: bool) {
        let mut out = std::io::stdout().lock();
        if structured {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&self.data).expect("value serializes"));
        } else {
            for l in &self.lines {
                let _ = writeln!(out, "{l}");
            }
        }
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
