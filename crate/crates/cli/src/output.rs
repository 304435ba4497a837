//! Output assembly: one envelope per command, rendered as canonical JSON,
//! TSV, or plain text, to stdout or a file.

use crate::rows::Row;
use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

/// A fully rendered command result: the JSON envelope plus the row grid the
/// tabular formats are built from.
pub struct Output {
    envelope: Value,
    header: &'static [&'static str],
    grid: Vec<Vec<String>>,
}

impl Output {
    /// Builds the output for a table-shaped command.
    pub fn table<R: Row>(command: &str, meta: &[(&str, Value)], rows: &[R]) -> Result<Self> {
        let mut envelope = serde_json::Map::new();
        envelope.insert("command".into(), json!(command));
        for (key, value) in meta {
            envelope.insert((*key).into(), value.clone());
        }
        envelope.insert("rows".into(), serde_json::to_value(rows)?);
        Ok(Output {
            envelope: Value::Object(envelope),
            header: R::header(),
            grid: rows.iter().map(Row::cells).collect(),
        })
    }

    /// Builds the output for a single-object command (lookup).
    pub fn single<R: Row>(command: &str, meta: &[(&str, Value)], row: &R) -> Result<Self> {
        let mut envelope = serde_json::Map::new();
        envelope.insert("command".into(), json!(command));
        for (key, value) in meta {
            envelope.insert((*key).into(), value.clone());
        }
        envelope.insert("entry".into(), serde_json::to_value(row)?);
        Ok(Output {
            envelope: Value::Object(envelope),
            header: R::header(),
            grid: vec![row.cells()],
        })
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope)
                    .expect("serializing an in-memory value cannot fail");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = String::new();
                s.push_str(&self.header.join("\t"));
                s.push('\n');
                for row in &self.grid {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                for row in &self.grid {
                    let line: Vec<String> = self
                        .header
                        .iter()
                        .zip(row)
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    s.push_str(&line.join(" "));
                    s.push('\n');
                }
                s
            }
        }
    }

    /// Writes the output in the requested format to stdout or `--out`.
    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let body = self.render(format);
        match out {
            Some(path) => std::fs::write(path, body)
                .with_context(|| format!("writing {}", path.display()))?,
            None => std::io::stdout()
                .write_all(body.as_bytes())
                .context("writing to stdout")?,
        }
        Ok(())
    }
}

/// Serializes a metadata value for the envelope.
pub fn meta<T: Serialize>(value: T) -> Value {
    serde_json::to_value(value).expect("metadata values are plain data")
}
