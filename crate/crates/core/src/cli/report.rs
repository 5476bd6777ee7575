//! Report assembly and emission as JSON or CSV.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::error::Result;

use super::config::{Format, RunConfig};

/// Rows for CSV output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// What a subcommand produced.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub class: Option<String>,
    pub results: Value,
    pub table: Option<Table>,
    pub findings: Vec<Value>,
    pub default_format: Format,
    /// A self-check inside the command failed; reported, then exit code 2.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, results: Value) -> Self {
        Self {
            command,
            class: None,
            results,
            table: None,
            findings: Vec::new(),
            default_format: Format::Json,
            failed: false,
        }
    }

    pub fn class(mut self, class: impl ToString) -> Self {
        self.class = Some(class.to_string());
        self
    }

    pub fn table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn csv_by_default(mut self) -> Self {
        self.default_format = Format::Csv;
        self
    }

    pub fn findings(mut self, findings: Vec<Value>) -> Self {
        self.findings = findings;
        self
    }

    fn meta(&self, cfg: &RunConfig) -> Value {
        json!({
            "tool": "logcoeff",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "bits": cfg.bits,
            "order": cfg.order,
            "seed": cfg.seed,
            "class": self.class,
        })
    }

    /// Serializes in the configured format (or the command's default).
    pub fn render(&self, cfg: &RunConfig) -> Result<Vec<u8>> {
        match cfg.format.unwrap_or(self.default_format) {
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("meta".into(), self.meta(cfg));
                doc.insert("results".into(), self.results.clone());
                doc.insert("findings".into(), Value::Array(self.findings.clone()));
                let mut out = serde_json::to_vec_pretty(&Value::Object(doc))?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => {
                let table = match &self.table {
                    Some(t) => t.clone(),
                    None => flatten(&self.results),
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&table.header).map_err(csv_err)?;
                for row in &table.rows {
                    w.write_record(row).map_err(csv_err)?;
                }
                w.into_inner().map_err(|e| crate::error::Error::Io(e.into_error()))
            }
        }
    }

    pub fn emit(&self, cfg: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
        let bytes = self.render(cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, bytes)?,
            None => stdout.write_all(&bytes)?,
        }
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(e))
}

/// `path,value` rows for every leaf of a JSON value.
pub fn flatten(v: &Value) -> Table {
    fn walk(prefix: &str, v: &Value, t: &mut Table) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, x, t);
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, t);
                }
            }
            Value::String(s) => t.push(vec![prefix.to_string(), s.clone()]),
            other => t.push(vec![prefix.to_string(), other.to_string()]),
        }
    }
    let mut t = Table::new(&["path", "value"]);
    walk("", v, &mut t);
    t
}
