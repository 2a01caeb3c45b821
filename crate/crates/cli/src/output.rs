use std::fs;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::Value;
use tournament_cycles::numfmt::{fmt15, sig15};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command's result in every shape it can be printed in.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    /// Rows for CSV and text output, when the result is tabular.
    pub table: Option<Table>,
    /// Preformatted text output, for commands that emit a file format.
    pub text: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn json(json: Value) -> Self {
        Report { json, table: None, text: None }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

/// JSON number rounded to 15 significant digits.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(sig15(x)).map_or(Value::Null, Value::Number)
}

pub fn cell(x: f64) -> String {
    fmt15(x)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if n.is_f64() => fmt15(x),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

/// The top-level scalar fields of an object, as a one-row table.
fn scalar_table(json: &Value) -> Table {
    let mut headers = Vec::new();
    let mut row = Vec::new();
    if let Value::Object(map) = json {
        for (key, value) in map {
            if !value.is_array() && !value.is_object() {
                headers.push(key.clone());
                row.push(scalar_text(value));
            }
        }
    }
    Table { headers, rows: vec![row] }
}

fn render_csv(table: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for line in std::iter::once(&table.headers).chain(&table.rows) {
        w.write_record(line).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
}

fn render_aligned(table: &Table) -> String {
    let mut widths: Vec<usize> = table.headers.iter().map(String::len).collect();
    for row in &table.rows {
        for (w, f) in widths.iter_mut().zip(row) {
            *w = (*w).max(f.len());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&table.headers).chain(&table.rows) {
        let fields: Vec<String> = line.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
        out.push_str(fields.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_fields(json: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = json {
        for (key, value) in map {
            let shown = match value {
                Value::Array(_) | Value::Object(_) => value.to_string(),
                v => scalar_text(v),
            };
            out.push_str(&format!("{key}: {shown}\n"));
        }
    }
    out
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report.table.as_ref().unwrap_or(&scalar_table(&report.json))),
        Format::Text => match (&report.text, &report.table) {
            (Some(text), _) => text.clone(),
            (None, Some(table)) => render_aligned(table),
            (None, None) => render_fields(&report.json),
        },
    }
}

pub fn emit(report: &Report, format: Format, path: Option<&Path>) -> io::Result<()> {
    let text = render(report, format);
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_of_scalars() {
        let r = Report::json(json!({"a": 1, "b": num(1.0 / 3.0), "list": [1, 2]}));
        assert_eq!(render(&r, Format::Csv), "a,b\n1,0.333333333333333\n");
    }

    #[test]
    fn text_prefers_preformatted_output() {
        let r = Report::json(json!({"a": 1})).with_text("3\n010\n".into());
        assert_eq!(render(&r, Format::Text), "3\n010\n");
        assert_eq!(render(&Report::json(json!({"a": "x"})), Format::Text), "a: x\n");
    }

    #[test]
    fn aligned_table() {
        let t = Table { headers: vec!["l".into(), "value".into()], rows: vec![vec!["10".into(), "1".into()]] };
        let r = Report::json(Value::Null).with_table(t);
        assert_eq!(render(&r, Format::Text), "l   value\n10  1\n");
        let quoted = Table { headers: vec!["a,b".into()], rows: vec![] };
        assert_eq!(render(&Report::json(Value::Null).with_table(quoted), Format::Csv), "\"a,b\"\n");
    }
}
