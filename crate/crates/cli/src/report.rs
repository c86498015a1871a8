use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessOut {
    pub label: String,
    pub input: Vec<(String, String)>,
    pub defect: String,
}

/// Outcome of one invocation. Field order is fixed so that the JSON
/// rendering is byte-identical across runs with the same inputs.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub witnesses: Vec<WitnessOut>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub bounds: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    /// Human-readable body, printed before the status line.
    #[serde(skip)]
    pub lines: Vec<String>,
    /// Print only `lines`, without the status footer.
    #[serde(skip)]
    pub bare: bool,
}

impl Report {
    pub fn new(command: String, status: Status) -> Self {
        Report {
            command,
            status,
            witnesses: Vec::new(),
            bounds: BTreeMap::new(),
            seed: None,
            notes: Vec::new(),
            result: Value::Null,
            timing_ms: None,
            lines: Vec::new(),
            bare: false,
        }
    }

    pub fn bound(mut self, name: &str, value: u64) -> Self {
        self.bounds.insert(name.to_string(), value);
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("report serializes");
        }
        let mut out: Vec<String> = self.lines.clone();
        if self.bare {
            return out.join("\n");
        }
        for w in &self.witnesses {
            let input = w
                .input
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            out.push(format!("witness: {} at ({input}): {}", w.label, w.defect));
        }
        for n in &self.notes {
            out.push(format!("note: {n}"));
        }
        if !self.bounds.is_empty() {
            let b = self
                .bounds
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            out.push(format!("bounds: {b}"));
        }
        if let Some(s) = self.seed {
            out.push(format!("seed: {s}"));
        }
        if let Some(t) = self.timing_ms {
            out.push(format!("time: {t} ms"));
        }
        out.push(format!(
            "status: {}",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            }
        ));
        out.join("\n")
    }
}
