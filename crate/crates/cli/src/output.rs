use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Wrapper around every JSON document the tool prints.
#[derive(Serialize)]
pub struct OutputEnvelope<T: Serialize> {
    pub command: String,
    pub parameters: Value,
    pub results: T,
    /// Only filled in with `--timing`, so default output is byte-stable.
    pub elapsed_ms: Option<u64>,
    pub version: &'static str,
    pub schema_version: u32,
}

impl<T: Serialize> OutputEnvelope<T> {
    pub fn new(command: &str, parameters: Value, results: T) -> Self {
        OutputEnvelope {
            command: command.to_string(),
            parameters,
            results,
            elapsed_ms: None,
            version: env!("CARGO_PKG_VERSION"),
            schema_version: SCHEMA_VERSION,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope is serializable")
    }
}

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

pub fn opt_big(v: &Option<BigInt>) -> Value {
    v.as_ref().map_or(Value::Null, big)
}

/// Left-aligned text table with two spaces between columns.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}
