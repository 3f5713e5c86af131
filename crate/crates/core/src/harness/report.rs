use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The instance could not be decided, e.g. no wall witness at this size.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub label: String,
    pub sub_seed: Option<u64>,
    /// Input graphs as graph6 strings.
    pub inputs: BTreeMap<String, String>,
    pub measurements: BTreeMap<String, Value>,
    pub status: Status,
    pub failures: Vec<String>,
}

impl InstanceRecord {
    pub fn new(index: usize, label: impl Into<String>, sub_seed: Option<u64>) -> Self {
        InstanceRecord {
            index,
            label: label.into(),
            sub_seed,
            inputs: BTreeMap::new(),
            measurements: BTreeMap::new(),
            status: Status::Pass,
            failures: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &str, graph6: String) {
        self.inputs.insert(name.to_string(), graph6);
    }

    pub fn measure(&mut self, name: &str, value: impl Into<Value>) {
        self.measurements.insert(name.to_string(), value.into());
    }

    /// Records a checked condition; a false condition fails the instance.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.status = Status::Fail;
            self.failures.push(what());
        }
    }

    pub fn mark_inconclusive(&mut self, why: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Inconclusive;
        }
        self.measure("inconclusive_reason", why.into());
    }
}

/// A regenerated input, recorded so reruns can explain derived sub-seeds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetryRecord {
    pub trial: usize,
    pub attempt: usize,
    pub sub_seed: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema: u32,
    pub experiment: String,
    pub seed: u64,
    pub trials: usize,
    pub parameters: BTreeMap<String, Value>,
    pub instances: Vec<InstanceRecord>,
    pub retries: Vec<RetryRecord>,
    pub verdict: Status,
}

impl ExperimentReport {
    pub fn new(
        experiment: &str,
        seed: u64,
        trials: usize,
        parameters: BTreeMap<String, Value>,
        instances: Vec<InstanceRecord>,
        retries: Vec<RetryRecord>,
    ) -> Self {
        let verdict = if instances.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if instances.iter().any(|r| r.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        ExperimentReport {
            schema: REPORT_SCHEMA,
            experiment: experiment.to_string(),
            seed,
            trials,
            parameters,
            instances,
            retries,
            verdict,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.instances.iter().filter(|r| r.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per failing or inconclusive instance, then a totals line.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.instances {
            match r.status {
                Status::Pass => {}
                Status::Fail => out.push_str(&format!(
                    "FAIL {} #{}: {}\n",
                    r.label,
                    r.index,
                    r.failures.join("; ")
                )),
                Status::Inconclusive => out.push_str(&format!(
                    "INCONCLUSIVE {} #{}: {}\n",
                    r.label,
                    r.index,
                    r.measurements
                        .get("inconclusive_reason")
                        .and_then(Value::as_str)
                        .unwrap_or("")
                )),
            }
        }
        out.push_str(&format!(
            "{}: {} instances, {} passed, {} failed, {} inconclusive, {} retries; verdict {}\n",
            self.experiment,
            self.instances.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive),
            self.retries.len(),
            self.verdict
        ));
        out
    }
}

pub(crate) fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        let pass = InstanceRecord::new(0, "a", None);
        let mut fail = InstanceRecord::new(1, "b", None);
        fail.check(false, || "boom".into());
        let mut unsure = InstanceRecord::new(2, "c", None);
        unsure.mark_inconclusive("no witness");

        let r = ExperimentReport::new("t", 0, 0, BTreeMap::new(), vec![pass.clone()], vec![]);
        assert_eq!(r.verdict, Status::Pass);
        let r = ExperimentReport::new(
            "t",
            0,
            0,
            BTreeMap::new(),
            vec![pass.clone(), unsure.clone()],
            vec![],
        );
        assert_eq!(r.verdict, Status::Inconclusive);
        let r = ExperimentReport::new("t", 0, 0, BTreeMap::new(), vec![pass, unsure, fail], vec![]);
        assert_eq!(r.verdict, Status::Fail);
        assert!(r.summary().contains("FAIL b #1: boom"));
    }

    #[test]
    fn json_has_schema_and_round_trips() {
        let mut rec = InstanceRecord::new(0, "x", Some(5));
        rec.measure("omega", 3);
        rec.input("host", "C~".into());
        let r = ExperimentReport::new("t", 9, 1, params([("k", 2.into())]), vec![rec], vec![]);
        let json = r.to_json();
        assert!(json.contains("\"schema\": 1"));
        assert!(json.contains("\"verdict\": \"pass\""));
        let back: ExperimentReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
