//! Machine-readable verification reports.
//!
//! Every report shares the fields `window`, `grid`, `tol`, `counts`,
//! `max_residual` and `argmax_location`; suite-specific data goes in
//! `details`. Output is byte-identical for identical inputs: object keys are
//! sorted and floats are written with 17 significant digits.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::verify::Window;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub pass: bool,
    pub window: Option<Window>,
    pub grid: Option<usize>,
    pub tol: f64,
    pub counts: BTreeMap<String, usize>,
    pub max_residual: Option<f64>,
    pub argmax_location: Option<Vec<f64>>,
    pub details: Value,
}

impl Report {
    pub fn new(suite: &str, tol: f64) -> Self {
        Report {
            suite: suite.to_string(),
            pass: false,
            window: None,
            grid: None,
            tol,
            counts: BTreeMap::new(),
            max_residual: None,
            argmax_location: None,
            details: Value::Null,
        }
    }

    pub fn count(mut self, key: &str, n: usize) -> Self {
        self.counts.insert(key.to_string(), n);
        self
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn to_json(&self) -> String {
        to_json_string(&self.to_value())
    }
}

/// `x` with 17 significant digits in scientific notation; `-0` prints as `0`.
pub fn fmt_f64(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

/// Pretty-printed JSON with sorted keys and fixed float formatting.
pub fn to_json_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Null | Value::Bool(_) | Value::String(_) => out.push_str(&v.to_string()),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => {
                let _ = write!(out, "{i}");
            }
            (None, Some(u)) => {
                let _ = write!(out, "{u}");
            }
            _ => out.push_str(&fmt_f64(n.as_f64().unwrap_or(f64::NAN))),
        },
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, item, depth + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            let mut keys: Vec<_> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (k, key) in keys.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String((*key).clone()).to_string());
                out.push_str(": ");
                write_value(out, &map[*key], depth + 1);
                out.push_str(if k + 1 < keys.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
    }
}
