//! Output records and their text, CSV and JSON renderings.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SCHEMA: &str = "detloci/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: vec![] }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// A command's result: ordered key/value fields, optional tables and the
/// process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub fields: Vec<(String, Value)>,
    pub tables: Vec<Table>,
    /// Verbatim output that replaces every rendering, for commands whose
    /// stdout is itself an input file.
    pub body: Option<String>,
    pub code: i32,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), fields: vec![], tables: vec![], body: None, code: 0 }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.into(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn render(&self, format: Format, header: bool) -> String {
        if let Some(b) = &self.body {
            return b.clone();
        }
        match format {
            Format::Text => self.text(header),
            Format::Csv => self.csv(header),
            Format::Json => self.json(header),
        }
    }

    fn text(&self, header: bool) -> String {
        let mut out = String::new();
        if header {
            out.push_str(&format!("# detloci {VERSION}\n"));
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {}\n", plain(v)));
        }
        for t in &self.tables {
            out.push_str(&format!("[{}]\n", t.name));
            let widths: Vec<usize> = (0..t.header.len())
                .map(|c| {
                    t.rows
                        .iter()
                        .map(|r| r[c].chars().count())
                        .chain([t.header[c].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&line(&t.header));
            for r in &t.rows {
                out.push_str(&line(r));
            }
        }
        out
    }

    fn csv(&self, header: bool) -> String {
        let mut out = String::new();
        if header {
            out.push_str(&format!("# detloci {VERSION}\n"));
        }
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(vec![]);
        if !self.fields.is_empty() {
            w.write_record(["key", "value"]).expect("in-memory write");
            for (k, v) in &self.fields {
                w.write_record([k.as_str(), plain(v).as_str()]).expect("in-memory write");
            }
        }
        for t in &self.tables {
            let head: Vec<&str> = ["table"].into_iter().chain(t.header.iter().map(String::as_str)).collect();
            w.write_record(&head).expect("in-memory write");
            for r in &t.rows {
                let row: Vec<&str> =
                    [t.name.as_str()].into_iter().chain(r.iter().map(String::as_str)).collect();
                w.write_record(&row).expect("in-memory write");
            }
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8 input"));
        out
    }

    fn json(&self, header: bool) -> String {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        if header {
            m.insert("version".into(), json!(VERSION));
        }
        m.insert("command".into(), json!(self.command));
        for (k, v) in &self.fields {
            m.insert(k.clone(), v.clone());
        }
        if !self.tables.is_empty() {
            let mut tables = Map::new();
            for t in &self.tables {
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|r| {
                        Value::Object(t.header.iter().cloned().zip(r.iter().map(|c| json!(c))).collect())
                    })
                    .collect();
                tables.insert(t.name.clone(), Value::Array(rows));
            }
            m.insert("tables".into(), Value::Object(tables));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("values serialize");
        s.push('\n');
        s
    }
}

/// Strings without quotes, everything else as compact JSON.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(plain).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}
