//! Machine-readable run reports and stored witnesses.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::minors::MinorModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub context: String,
}

/// Fields that legitimately differ between equivalent runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_time_s: f64,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub verdict: Verdict,
    pub parameters: BTreeMap<String, Value>,
    pub instances_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub witnesses_stored: u64,
    pub details: BTreeMap<String, Value>,
    pub config: BTreeMap<String, Value>,
    pub timing: Timing,
}

impl LemmaReport {
    pub fn new(lemma: impl Into<String>) -> Self {
        let mut config = BTreeMap::new();
        config.insert("code_version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        LemmaReport {
            lemma: lemma.into(),
            verdict: Verdict::Verified,
            parameters: BTreeMap::new(),
            instances_checked: 0,
            counterexamples: Vec::new(),
            witnesses_stored: 0,
            details: BTreeMap::new(),
            config,
            timing: Timing {
                wall_time_s: 0.0,
                jobs: rayon::current_num_threads(),
            },
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.into(), value.into());
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    pub fn counterexample(&mut self, g: &Graph, context: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            graph6: graph6::encode(g),
            context: context.into(),
        });
    }

    /// Sets the verdict from the counterexample list.
    pub fn seal(&mut self) {
        self.verdict = if self.counterexamples.is_empty() {
            Verdict::Verified
        } else {
            Verdict::Counterexample
        };
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The JSON line without the `timing` field.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(m) = &mut v {
            m.remove("timing");
        }
        v.to_string()
    }
}

/// A persisted minor model: host and pattern as graph6 plus branch sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub context: String,
    pub host: String,
    pub pattern: String,
    pub branch_sets: Vec<Vec<usize>>,
}

impl Witness {
    pub fn new(context: impl Into<String>, host: &Graph, pattern: &Graph, model: &MinorModel) -> Self {
        Witness {
            context: context.into(),
            host: graph6::encode(host),
            pattern: graph6::encode(pattern),
            branch_sets: model.branch_sets.iter().map(|b| b.to_vec()).collect(),
        }
    }

    /// Decodes and re-runs the model validator.
    pub fn revalidate(&self) -> Result<(), String> {
        let host = graph6::decode(&self.host).map_err(|e| e.to_string())?;
        let pattern = graph6::decode(&self.pattern).map_err(|e| e.to_string())?;
        if self.branch_sets.iter().flatten().any(|&v| v >= host.n()) {
            return Err("branch set vertex outside the host".into());
        }
        let model = MinorModel {
            branch_sets: self
                .branch_sets
                .iter()
                .map(|b| VertexSet::from_vertices(b.iter().copied()))
                .collect(),
        };
        model.validate(&host, &pattern)
    }
}

/// A report together with the witnesses it certifies.
#[derive(Clone, Debug)]
pub struct LemmaRun {
    pub report: LemmaReport,
    pub witnesses: Vec<Witness>,
}

impl LemmaRun {
    pub fn new(report: LemmaReport, witnesses: Vec<Witness>) -> Self {
        let mut report = report;
        report.witnesses_stored = witnesses.len() as u64;
        report.seal();
        LemmaRun { report, witnesses }
    }
}
