use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseVerdict {
    Holds,
    Fails,
    Refused,
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseVerdict::Holds => "holds",
            CaseVerdict::Fails => "fails",
            CaseVerdict::Refused => "refused",
        })
    }
}

/// `{case, verdict, certificate?, torsion_index?, elapsed_ms}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub verdict: CaseVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    /// A JSON integer, or a decimal string when it does not fit in `u64`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_index: Option<Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(case: impl Into<String>, verdict: CaseVerdict, elapsed: Duration) -> Report {
        Report {
            case: case.into(),
            verdict,
            certificate: None,
            torsion_index: None,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn with_certificate(mut self, c: Value) -> Report {
        self.certificate = Some(c);
        self
    }

    pub fn with_torsion_index(mut self, k: &BigInt) -> Report {
        self.torsion_index = Some(match k.to_u64() {
            Some(n) => Value::from(n),
            None => Value::from(k.to_string()),
        });
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// The report document for one case.
pub fn emit_report(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("plain data")
}

/// Line-oriented text with the same fields as the JSON.
pub fn render_report(r: &Report) -> String {
    let mut out = format!("{}: {} ({} ms)", r.case, r.verdict, r.elapsed_ms);
    if let Some(k) = &r.torsion_index {
        out.push_str(&format!("\n  torsion_index: {k}"));
    }
    if let Some(c) = &r.certificate {
        out.push_str(&format!("\n  certificate: {c}"));
    }
    out
}
