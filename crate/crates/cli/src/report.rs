//! Verification reports. The checked body is serialized canonically (object
//! keys sorted, no whitespace) and hashed; timing sits outside the body.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use unital_core::Verification;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    /// Command name and the options that affect the result.
    pub command: Value,
    pub input_digest: String,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    pub results: Value,
    pub digest: String,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: Value, input_digest: String, verification: &Verification, results: Value, elapsed_ms: f64) -> Self {
        let checks: Vec<CheckRecord> = verification
            .checks
            .iter()
            .map(|c| CheckRecord {
                name: c.name.clone(),
                status: if c.passed { Status::Pass } else { Status::Fail },
                witness: c.witness.clone(),
            })
            .collect();
        let status = if verification.passed() { Status::Pass } else { Status::Fail };
        let mut report = Report {
            schema: REPORT_SCHEMA,
            command,
            input_digest,
            status,
            checks,
            results,
            digest: String::new(),
            timing: Timing { elapsed_ms },
        };
        report.digest = sha256_hex(canonical_json(&report.body()).as_bytes());
        report
    }

    /// Everything except `digest` and `timing`.
    pub fn body(&self) -> Value {
        json!({
            "schema": self.schema,
            "command": self.command,
            "input_digest": self.input_digest,
            "status": self.status,
            "checks": self.checks,
            "results": self.results,
        })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let name = self.command.get("name").and_then(Value::as_str).unwrap_or("?");
        out.push_str(&format!("command: {name}\n"));
        out.push_str(&format!("input: sha256:{}\n", self.input_digest));
        if let Value::Object(fields) = &self.results {
            for (k, v) in fields {
                out.push_str(&format!("{k}: {}\n", text_value(v)));
            }
        }
        for c in &self.checks {
            out.push_str(&format!("check {}: {} ({})\n", c.name, c.status.label(), c.witness));
        }
        out.push_str(&format!("result: {}\n", self.status.label()));
        out.push_str(&format!("digest: sha256:{}\n", self.digest));
        out.push_str(&format!("elapsed: {:.3} ms\n", self.timing.elapsed_ms));
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => canonical_json(other),
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Compact JSON with object keys in sorted order.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_canonical(v, &mut out);
    out
}

fn write_canonical(v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(k).expect("string keys"));
                out.push(':');
                write_canonical(&map[k], out);
            }
            out.push('}');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_canonical(item, out);
            }
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
