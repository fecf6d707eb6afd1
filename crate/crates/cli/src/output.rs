use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use goldbach_explicit::bounds::hp::R;
use goldbach_explicit::bounds::{tagged, BoundBreakdown, Provenance};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// A command result: a JSON document plus the same content as rows.
pub struct Out {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn num(v: f64) -> Value {
    json!({ "value": v, "provenance": Provenance::Computed })
}

pub fn int(v: u64) -> Value {
    json!({ "value": v, "provenance": Provenance::Computed })
}

fn prov_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Computed => "computed",
        Provenance::PaperConstant => "paper-constant",
        Provenance::Manifest => "manifest",
    }
}

/// Key/value output built up row by row.
pub struct Record {
    map: serde_json::Map<String, Value>,
    rows: Vec<Vec<String>>,
}

impl Record {
    pub fn new(command: &str) -> Record {
        let mut map = serde_json::Map::new();
        map.insert("command".into(), json!(command));
        Record { map, rows: Vec::new() }
    }

    pub fn num(mut self, key: &str, v: f64) -> Self {
        self.map.insert(key.into(), num(v));
        self.rows.push(vec![key.into(), format!("{v}"), "computed".into()]);
        self
    }

    pub fn int(mut self, key: &str, v: u64) -> Self {
        self.map.insert(key.into(), int(v));
        self.rows.push(vec![key.into(), v.to_string(), "computed".into()]);
        self
    }

    pub fn hp(mut self, key: &str, v: &R, digits: usize, p: Provenance) -> Self {
        self.map.insert(key.into(), tagged(v, digits, p));
        self.rows.push(vec![key.into(), v.to_decimal(digits), prov_name(p).into()]);
        self
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        let v = v.into();
        self.map.insert(key.into(), json!(v));
        self.rows.push(vec![key.into(), v, String::new()]);
        self
    }

    pub fn flag(mut self, key: &str, v: bool) -> Self {
        self.map.insert(key.into(), json!(v));
        self.rows.push(vec![key.into(), v.to_string(), String::new()]);
        self
    }

    pub fn notes(mut self, notes: &[String]) -> Self {
        if !notes.is_empty() {
            self.map.insert("notes".into(), json!(notes));
            for n in notes {
                self.rows.push(vec!["note".into(), n.clone(), String::new()]);
            }
        }
        self
    }

    pub fn done(self) -> Out {
        Out {
            json: Value::Object(self.map),
            header: vec!["key".into(), "value".into(), "provenance".into()],
            rows: self.rows,
        }
    }
}

pub fn breakdown(command: &str, b: &BoundBreakdown, digits: usize) -> Out {
    let mut json = b.to_json(digits);
    json["command"] = json!(command);
    let mut rows = vec![vec!["total".into(), b.total.to_decimal(digits), "computed".into()]];
    if !b.scale.is_empty() {
        rows.push(vec!["scale".into(), b.scale.clone(), String::new()]);
    }
    if let Some(p) = &b.packaged {
        rows.push(vec!["packaged".into(), p.to_decimal(digits), "paper-constant".into()]);
    }
    rows.push(vec!["hypotheses_met".into(), b.hypotheses_met.to_string(), String::new()]);
    for (k, v) in &b.components {
        rows.push(vec![format!("component.{k}"), v.to_decimal(digits), "computed".into()]);
    }
    for (k, v) in &b.extras {
        rows.push(vec![format!("extra.{k}"), v.to_decimal(digits), "computed".into()]);
    }
    for (k, v) in &b.inputs {
        rows.push(vec![format!("input.{k}"), v.to_decimal(digits), "manifest".into()]);
    }
    for n in &b.notes {
        rows.push(vec!["note".into(), n.clone(), String::new()]);
    }
    Out { json, header: vec!["key".into(), "value".into(), "provenance".into()], rows }
}

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0usize; cols];
    for r in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        for (i, c) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let mut s = String::new();
    for r in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| if i + 1 == r.len() { c.clone() } else { format!("{c:<w$}", w = width[i]) })
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

pub fn render(out: &Out, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.header)?;
            for r in &out.rows {
                w.write_record(r)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Table => table(&out.header, &out.rows),
    })
}

pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut o = std::io::stdout().lock();
            o.write_all(text.as_bytes())?;
            o.flush()?;
            Ok(())
        }
    }
}
