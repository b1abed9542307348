use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check with exact expected and actual values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    /// The mathematical statement being checked.
    pub paper_ref: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    /// Status is `pass` exactly when the rendered values agree.
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        paper_ref: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check { id: id.into(), description: description.into(), paper_ref: paper_ref.into(), status, expected, actual }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub scenario: String,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
    pub version: String,
}

impl VerificationReport {
    pub fn new(scenario: &str, config: BTreeMap<String, String>) -> Self {
        VerificationReport {
            scenario: scenario.to_string(),
            config,
            checks: Vec::new(),
            timing_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// A report is well formed when it has checks and their ids are unique.
    pub fn validate(&self) -> Result<(), String> {
        if self.checks.is_empty() {
            return Err(format!("report '{}' has no checks", self.scenario));
        }
        let mut seen = HashSet::new();
        for c in &self.checks {
            if !seen.insert(c.id.as_str()) {
                return Err(format!("duplicate check id '{}'", c.id));
            }
        }
        Ok(())
    }
}

impl fmt::Display for VerificationReport {
    /// Fixed-width table, one check per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        writeln!(f, "scenario {} ({passed}/{} passed, {} ms)", self.scenario, self.checks.len(), self.timing_ms)?;
        for (k, v) in &self.config {
            writeln!(f, "  {k}: {v}")?;
        }
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:<width$}  expected {}  actual {}", c.id, c.expected, c.actual)?;
        }
        Ok(())
    }
}
