//! Output plumbing: error-to-exit-status mapping, the config echo header,
//! and the table/CSV/JSON writers. CSV numbers are fixed scientific with
//! 12 significant digits; JSON numbers keep full binary precision.

use serde::Serialize;
use tqm_core::TqmError;

use crate::args::Common;

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: exits 2 with a plain message, like a parse error.
    Usage(String),
    /// A computation refused its inputs: exits 1 with error JSON on stderr.
    Computation(TqmError),
    Io(std::io::Error),
    /// Validation cases failed; the report was still emitted normally.
    ValidationFailed { failed: usize },
}

impl From<TqmError> for CliError {
    fn from(e: TqmError) -> Self {
        CliError::Computation(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    /// Print the machine-readable error and return the exit status.
    pub fn report(&self) -> i32 {
        let (kind, message, status) = match self {
            CliError::Usage(m) => {
                eprintln!("error: {m}");
                return 2;
            }
            CliError::Computation(e) => (variant_name(e), e.to_string(), 1),
            CliError::Io(e) => ("Io".to_string(), e.to_string(), 1),
            CliError::ValidationFailed { failed } => (
                "ValidationFailed".to_string(),
                format!("{failed} validation case(s) failed"),
                1,
            ),
        };
        let payload = serde_json::json!({ "error": { "kind": kind, "message": message } });
        eprintln!("{payload}");
        status
    }
}

/// The enum variant's name, recovered from the debug form.
fn variant_name(e: &TqmError) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| c == ' ' || c == '(' || c == '{')
        .next()
        .unwrap_or("Error")
        .to_string()
}

/// 12 significant digits, fixed scientific — the CSV number format.
/// Negative zero is folded into zero.
pub fn sci12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// Compact JSON of the resolved config, used in `#` headers.
pub fn config_line<C: Serialize>(config: &C) -> String {
    format!("# config {}\n", serde_json::to_string(config).expect("config serializes"))
}

/// Aligned columns with a header row, space-padded.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut width = vec![0usize; cols];
    for (i, h) in headers.iter().enumerate() {
        width[i] = h.len();
    }
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            width[i] = width[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < cols {
                for _ in cell.len()..width[i] {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    emit(&mut out, &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(&mut out, row);
    }
    out
}

/// Comma-joined rows under a header line.
pub fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = headers.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifact serializes");
    s.push('\n');
    s
}

/// Write the artifact to the configured sink.
pub fn finish(common: &Common, artifact: String) -> Result<(), CliError> {
    match &common.output {
        Some(path) => std::fs::write(path, artifact)?,
        None => print!("{artifact}"),
    }
    Ok(())
}
