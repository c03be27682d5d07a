//! CSV input/output.
//!
//! The dialect is fixed: comma separators, `.` decimal point, one header row
//! of column names, and `#`-prefixed comment lines carrying the run
//! manifest. Floats are printed with Rust's shortest round-trip formatting,
//! so re-parsing an output file reproduces the in-memory values exactly.
//! Undefined entropies serialize as an empty cell with `defined=0`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use mscale_core::Signal;

use crate::errors::CliError;

/// The `# key: value` comment block embedded at the top of every output
/// file: command echo, resolved configuration, and seeds. Wall-clock
/// timings go to stderr instead so identical invocations produce
/// byte-identical files.
pub struct Manifest {
    entries: Vec<(String, String)>,
}

impl Manifest {
    pub fn new() -> Self {
        let argv: Vec<String> = std::env::args().skip(1).collect();
        let mut m = Manifest { entries: Vec::new() };
        m.push("mscale", env!("CARGO_PKG_VERSION"));
        m.push("command", argv.join(" "));
        m
    }

    pub fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn write_to(&self, w: &mut impl Write) -> std::io::Result<()> {
        for (k, v) in &self.entries {
            writeln!(w, "# {k}: {v}")?;
        }
        Ok(())
    }
}

/// Creates the output file with its manifest header already written.
pub fn create_output(path: &Path, manifest: &Manifest) -> Result<BufWriter<File>, CliError> {
    let file = File::create(path)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    manifest.write_to(&mut w)?;
    Ok(w)
}

/// Shortest round-trip representation of a float, or an empty cell.
pub fn cell(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v}"),
        None => String::new(),
    }
}

/// Reads a single-column CSV signal.
///
/// `#` comments and blank lines are skipped; one non-numeric header row is
/// tolerated; rows may carry extra columns, of which the first is used.
pub fn read_signal(path: &Path) -> Result<Signal, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let reader = BufReader::new(file);

    let mut samples = Vec::new();
    let mut header_seen = false;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let field = trimmed.split(',').next().unwrap_or("").trim();
        match field.parse::<f64>() {
            Ok(v) => samples.push(v),
            Err(_) if samples.is_empty() && !header_seen => header_seen = true,
            Err(_) => {
                return Err(CliError::Io(format!(
                    "{}:{}: not a number: {field:?}",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Signal::new(samples).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes a generated signal with its manifest.
pub fn write_signal(path: &Path, signal: &Signal, manifest: &Manifest) -> Result<(), CliError> {
    let mut w = create_output(path, manifest)?;
    writeln!(w, "sample")?;
    for v in signal.samples() {
        writeln!(w, "{v}")?;
    }
    w.flush()?;
    Ok(())
}
