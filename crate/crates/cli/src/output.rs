use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};
use sol_geom::triangles::{COPLANARITY_TOL, FLAT_SUM_TOL, VERTEX_SEPARATION};

use crate::args::{Format, GlobalOpts};

/// Single top-level JSON object every command prints.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: &'static str,
    pub input: Value,
    pub results: Value,
    pub version: &'static str,
    pub angle_unit: &'static str,
    pub tolerances: Value,
}

impl Envelope {
    pub fn new(command: &'static str, opts: &GlobalOpts, input: Value, results: Value) -> Self {
        Self {
            command,
            input,
            results,
            version: env!("CARGO_PKG_VERSION"),
            angle_unit: if opts.degrees { "degrees" } else { "radians" },
            tolerances: json!({
                "check": opts.tol,
                "coplanarity": COPLANARITY_TOL,
                "flat_sum": FLAT_SUM_TOL,
                "vertex_separation": VERTEX_SEPARATION,
            }),
        }
    }
}

/// Tabular payload for CSV output.
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Two-column `field,value` table from a nested JSON value, with dotted keys.
    pub fn flattened(v: &Value) -> Self {
        let mut t = Self::new(&["field", "value"]);
        flatten(v, String::new(), &mut t.rows);
        t
    }
}

fn flatten(v: &Value, key: String, out: &mut Vec<Vec<String>>) {
    let join = |k: &str| {
        if key.is_empty() {
            k.to_string()
        } else {
            format!("{key}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(x, join(k), out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push(vec![key, s.clone()]),
        Value::Null => out.push(vec![key, String::new()]),
        other => out.push(vec![key, other.to_string()]),
    }
}

/// Shortest round-trip representation; always parses back to the same `f64`.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else {
        format!("{x:?}")
    }
}

pub fn emit<W: Write>(
    out: &mut W,
    format: Format,
    envelope: &Envelope,
    table: Table,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, envelope)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&table.header)?;
            for r in &table.rows {
                w.write_record(r)?;
            }
            w.flush()
        }
    }
}
