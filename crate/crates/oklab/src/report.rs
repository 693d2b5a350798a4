//! Reports and their table, JSON and CSV renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::error::CliError;
use crate::format::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A tabular section with a fixed header.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Rows {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Rows {
    pub fn new(header: &[&str]) -> Self {
        Rows {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Result of one command: a JSON object with sorted keys plus an optional
/// table used by the table and CSV renderings.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
    rows: Option<Rows>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.set("command", command);
        r.set("schema_version", SCHEMA_VERSION);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn with_rows(&mut self, rows: Rows) {
        self.rows = Some(rows);
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.fields)
                    .map_err(|e| CliError::invalid(format!("report: {e}")))?;
                s.push('\n');
                Ok(s)
            }
            Format::Table => Ok(self.table()),
            Format::Csv => self.csv(),
        }
    }

    fn scalars(&self) -> Vec<(&str, String)> {
        self.fields
            .iter()
            .filter_map(|(k, v)| match v {
                Value::String(s) => Some((k.as_str(), s.clone())),
                Value::Number(n) => Some((k.as_str(), n.to_string())),
                Value::Bool(b) => Some((k.as_str(), b.to_string())),
                Value::Null => Some((k.as_str(), "-".to_string())),
                Value::Array(_) | Value::Object(_) => None,
            })
            .collect()
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let scalars = self.scalars();
        let width = scalars.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &scalars {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        if let Some(rows) = &self.rows {
            if !scalars.is_empty() {
                out.push('\n');
            }
            let mut widths: Vec<usize> = rows.header.iter().map(String::len).collect();
            for row in &rows.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                parts.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&rows.header));
            for row in &rows.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        out
    }

    fn csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| CliError::invalid(format!("report: {e}"));
        match &self.rows {
            Some(rows) => {
                w.write_record(&rows.header).map_err(err)?;
                for row in &rows.rows {
                    w.write_record(row).map_err(err)?;
                }
            }
            None => {
                w.write_record(["key", "value"]).map_err(err)?;
                for (k, v) in self.scalars() {
                    w.write_record([k, v.as_str()]).map_err(err)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::invalid(format!("report: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CliError::invalid(format!("report: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        r.set("zeta", 1);
        r.set("alpha", "x");
        let mut rows = Rows::new(&["p", "value"]);
        rows.push(vec!["1".into(), "1/2".into()]);
        r.with_rows(rows);
        r
    }

    #[test]
    fn table_keys_are_sorted() {
        let t = sample().render(Format::Table).unwrap();
        let alpha = t.find("alpha").unwrap();
        let zeta = t.find("zeta").unwrap();
        assert!(alpha < zeta);
        assert!(t.ends_with("1  1/2\n"));
    }

    #[test]
    fn csv_and_json() {
        assert_eq!(sample().render(Format::Csv).unwrap(), "p,value\n1,1/2\n");
        let j: Value = serde_json::from_str(&sample().render(Format::Json).unwrap()).unwrap();
        assert_eq!(j["schema_version"], 1);
        assert_eq!(j["command"], "demo");
        let mut bare = Report::new("x");
        bare.set("k", true);
        assert_eq!(bare.render(Format::Csv).unwrap(), "key,value\ncommand,x\nk,true\nschema_version,1\n");
    }
}
