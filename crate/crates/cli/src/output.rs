//! Rendering of results in the three output formats.

use std::fmt::Write as _;

use num_bigint::BigInt;
use prelie_core::sum::Term;
use prelie_core::{CoeffMatrix, Report, Status, TreeSum};
use serde_json::{json, Map, Number, Value};

use crate::args::Format;

/// An exact JSON integer.
pub fn integer(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("decimal integers are JSON numbers"),
    )
}

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A titled list of items: one per line plus a count line, a JSON object, or
/// an `index,<column>` table.
pub fn list(
    title: &str,
    column: &str,
    text: &[String],
    json_items: Vec<Value>,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out: String = text.iter().map(|t| format!("{t}\n")).collect();
            let _ = writeln!(out, "count {}", text.len());
            out
        }
        Format::Json => {
            let mut v = Map::new();
            v.insert("kind".into(), json!(title));
            v.insert("count".into(), json!(text.len()));
            v.insert("items".into(), Value::Array(json_items));
            to_json(&Value::Object(v))
        }
        Format::Csv => {
            let mut out = format!("index,{column}\n");
            for (i, t) in text.iter().enumerate() {
                let _ = writeln!(out, "{},{}", i + 1, csv_field(t));
            }
            out
        }
    }
}

pub fn sum<T: Term>(s: &TreeSum<T>, format: Format) -> String {
    match format {
        Format::Text => format!("{s}\n"),
        Format::Json => to_json(&s.to_json()),
        Format::Csv => {
            let mut out = String::from("coeff,tree\n");
            for (t, c) in s.iter() {
                let _ = writeln!(out, "{c},{t}");
            }
            out
        }
    }
}

pub fn matrix(m: &CoeffMatrix, format: Format) -> String {
    match format {
        Format::Text => m.to_text(),
        Format::Json => to_json(&m.to_json()),
        Format::Csv => m.to_csv(),
    }
}

/// Named fields: `key: value` lines, a JSON object, or `key,value` rows.
pub fn record(fields: &[(&str, Value)], format: Format) -> String {
    let plain = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match format {
        Format::Text => fields
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", plain(v)))
            .collect(),
        Format::Json => to_json(&Value::Object(
            fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        )),
        Format::Csv => {
            let mut out = String::from("key,value\n");
            for (k, v) in fields {
                let _ = writeln!(out, "{k},{}", csv_field(&plain(v)));
            }
            out
        }
    }
}

pub fn report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => format!("{r}\n"),
        Format::Json => to_json(&serde_json::to_value(r).expect("reports serialize")),
        Format::Csv => {
            let mut out = String::from("suite,name,status,detail\n");
            for c in &r.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                };
                let _ = writeln!(
                    out,
                    "{},{},{status},{}",
                    r.suite,
                    csv_field(&c.name),
                    csv_field(&c.detail)
                );
            }
            out
        }
    }
}

/// Raw text that has no structured form, such as section and monomial files.
pub fn document(text: &str, json_value: Value, format: Format) -> String {
    match format {
        Format::Json => to_json(&json_value),
        Format::Text | Format::Csv => text.to_string(),
    }
}
