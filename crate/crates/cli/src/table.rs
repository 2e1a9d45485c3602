use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use serde_json::Value;

/// One CSV table preceded by a JSON metadata block in `# ` comment lines.
#[derive(Debug, Clone)]
pub struct Table {
    pub metadata: Value,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub footer: Vec<String>,
}

impl Table {
    pub fn new(metadata: Value, columns: Vec<String>) -> Self {
        Self {
            metadata,
            columns,
            rows: Vec::new(),
            footer: Vec::new(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let meta = serde_json::to_string_pretty(&self.metadata).expect("metadata is valid JSON");
        for line in meta.lines() {
            let _ = writeln!(out, "# {line}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format_number(*v)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        for line in &self.footer {
            let _ = writeln!(out, "# {line}");
        }
        out
    }

    pub fn write_to(&self, out: Option<&Path>) -> std::io::Result<()> {
        let text = self.render();
        match out {
            Some(path) => std::fs::write(path, text),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(text.as_bytes())?;
                lock.flush()
            }
        }
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}
