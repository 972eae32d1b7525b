//! Machine-readable command reports.

use serde::Serialize;
use serde_json::Value;

/// Uniform JSON envelope emitted by every CLI command under `--json`.
/// For fixed inputs and bounds the `inputs`, `verdict` and `details`
/// fields are deterministic; only `timing_ms` varies between runs.
#[derive(Serialize, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    /// Three-way: `true`/`false` for verdict commands, `null` for pure
    /// queries.
    pub verdict: Option<bool>,
    pub details: Value,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Report {
        Report {
            command: command.to_string(),
            inputs,
            verdict: None,
            details: Value::Null,
            timing_ms: 0,
        }
    }

    pub fn verdict(mut self, v: bool) -> Report {
        self.verdict = Some(v);
        self
    }

    pub fn details(mut self, d: Value) -> Report {
        self.details = d;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
