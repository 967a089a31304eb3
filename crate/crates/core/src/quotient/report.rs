use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Sampled displacement is below the threshold the statement needs;
    /// violations are expected and are listed but not counted as failures.
    OutOfHypothesis,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    /// Sites checked.
    pub eligible: usize,
    /// Sites skipped because the window cannot see their neighbourhood.
    pub truncated: usize,
    pub witnesses: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_displacement: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
    /// Suite-specific tallies.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
}

impl Report {
    /// Status from the violation list and the displacement hypothesis.
    ///
    /// For the empty sample the hypothesis holds vacuously. A displacement
    /// that is only a lower bound counts as below threshold unless the bound
    /// itself reaches it.
    pub fn conclude(
        suite: &str,
        threshold: Option<u64>,
        min_displacement: Option<(u64, bool)>,
        eligible: usize,
        truncated: usize,
        witnesses: Vec<serde_json::Value>,
    ) -> Self {
        let in_hypothesis = match (threshold, min_displacement) {
            (Some(t), Some((d, _))) => d >= t,
            _ => true,
        };
        let status = if !in_hypothesis {
            Status::OutOfHypothesis
        } else if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            suite: suite.to_string(),
            status,
            eligible,
            truncated,
            witnesses,
            min_displacement: min_displacement.map(|d| d.0),
            threshold,
            counts: BTreeMap::new(),
        }
    }

    pub fn with_count(mut self, key: &str, n: usize) -> Self {
        self.counts.insert(key.to_string(), n);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
