use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// A mathematical success or a positive decided verdict.
    Success,
    /// A decided negative verdict.
    Negative,
    Unknown,
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Negative => 2,
            Outcome::Unknown => 3,
            Outcome::Error => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub total_ms: f64,
}

/// The published output schema.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the input file, or of the normalized arguments for
    /// commands without an input file.
    pub input_digest: String,
    pub outcome: Outcome,
    pub verdict: Option<String>,
    pub result: Value,
    pub witness: Option<Value>,
    pub error: Option<String>,
    pub timings: Timings,
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(m) if !m.is_empty() => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(out, val, indent + 1);
                    }
                    Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(out, val, indent + 1);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(val));
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if item.is_object() {
                    let _ = writeln!(out, "{pad}-");
                    render_value(out, item, indent + 1);
                } else {
                    let _ = writeln!(out, "{pad}- {}", inline(item));
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "input digest: {}", self.input_digest);
        let _ = writeln!(out, "outcome: {:?}", self.outcome);
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "verdict: {v}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: {e}");
        }
        if !self.result.is_null() {
            let _ = writeln!(out, "result:");
            render_value(&mut out, &self.result, 1);
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness:");
            render_value(&mut out, w, 1);
        }
        let _ = writeln!(out, "time: {:.1} ms", self.timings.total_ms);
        out
    }
}
