//! Deterministic report assembly: fixed column sets, twelve fractional
//! digits for real numbers, no timestamps. CSV emits one header row plus
//! data rows; JSON wraps the same rows with a machine-readable summary.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// One report cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Real(f64),
    /// A real that may be undefined (rendered as an empty CSV field and
    /// a JSON null).
    OptReal(Option<f64>),
    Text(String),
    Flag(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Real(x) => format!("{x:.12}"),
            Cell::OptReal(Some(x)) => format!("{x:.12}"),
            Cell::OptReal(None) => String::new(),
            Cell::Text(s) => s.clone(),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Real(x) => json!(x),
            Cell::OptReal(x) => json!(x),
            Cell::Text(s) => json!(s),
            Cell::Flag(b) => json!(b),
        }
    }
}

/// A complete tabular report with an optional summary object.
pub struct Report {
    command: &'static str,
    columns: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
    summary: Value,
}

impl Report {
    pub fn new(command: &'static str, columns: &'static [&'static str]) -> Self {
        Self { command, columns, rows: Vec::new(), summary: Value::Null }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn set_summary(&mut self, summary: Value) {
        self.summary = summary;
    }

    pub fn summary(&self) -> &Value {
        &self.summary
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    obj.insert((*name).to_string(), cell.json());
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "command": self.command,
            "columns": self.columns,
            "rows": rows,
            "summary": self.summary,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report serialization");
        text.push('\n');
        text
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    /// Write the rendered report to a file or standard output.
    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let text = self.render(format);
        match out {
            Some(path) => std::fs::write(path, text)
                .with_context(|| format!("writing report to {}", path.display()))?,
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(text.as_bytes()).context("writing report to standard output")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", &["t", "value", "note", "ok"]);
        r.push(vec![
            Cell::Real(1.5),
            Cell::OptReal(None),
            Cell::Text("abc".into()),
            Cell::Flag(true),
        ]);
        r.push(vec![
            Cell::Real(2.5),
            Cell::OptReal(Some(0.25)),
            Cell::Text("def".into()),
            Cell::Flag(false),
        ]);
        r
    }

    #[test]
    fn csv_has_one_header_and_fixed_digits() {
        let text = sample().render(Format::Csv);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "t,value,note,ok");
        assert_eq!(lines[1], "1.500000000000,,abc,true");
        assert_eq!(lines[2], "2.500000000000,0.250000000000,def,false");
    }

    #[test]
    fn json_round_trips_and_is_deterministic() {
        let a = sample().render(Format::Json);
        let b = sample().render(Format::Json);
        assert_eq!(a, b);
        let doc: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(doc["command"], "demo");
        assert_eq!(doc["rows"][0]["value"], Value::Null);
        assert_eq!(doc["rows"][1]["ok"], json!(false));
    }
}
