//! Machine-readable verdict documents.
//!
//! A report is a list of named checks, each pass / fail / not-applicable
//! with witness values rendered as decimal strings. Reports are
//! deterministic for fixed inputs; timing never goes inside the body.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Whether a check verifies a proved statement or records an open
/// observation from the data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Proved,
    Observed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            notes: BTreeMap::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        kind: CheckKind,
        status: CheckStatus,
        witnesses: Vec<(&str, String)>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            kind,
            status,
            witnesses: witnesses
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witnesses: Vec<(&str, String)>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(name, CheckKind::Proved, status, witnesses);
    }

    pub fn observed(&mut self, name: impl Into<String>, ok: bool, witnesses: Vec<(&str, String)>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(name, CheckKind::Observed, status, witnesses);
    }

    pub fn not_applicable(&mut self, name: impl Into<String>, reason: &str) {
        self.push(
            name,
            CheckKind::Proved,
            CheckStatus::NotApplicable,
            vec![("reason", reason.to_string())],
        );
    }

    pub fn observed_not_applicable(&mut self, name: impl Into<String>, reason: &str) {
        self.push(
            name,
            CheckKind::Observed,
            CheckStatus::NotApplicable,
            vec![("reason", reason.to_string())],
        );
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.insert(key.into(), value.into());
    }

    /// True when no check failed (not-applicable checks do not count).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_fail_logic() {
        let mut r = Report::new("demo");
        r.check("a", true, vec![]);
        r.not_applicable("b", "precondition missing");
        assert!(r.passed());
        r.observed("c", false, vec![("det", "7".into())]);
        assert!(!r.passed());
        assert_eq!(r.failed_checks().len(), 1);
    }

    #[test]
    fn serialization_is_stable() {
        let mut r = Report::new("demo");
        r.check("a", true, vec![("x", "1".into())]);
        let one = serde_json::to_string(&r).unwrap();
        let two = serde_json::to_string(&r).unwrap();
        assert_eq!(one, two);
        assert!(one.contains("\"status\":\"pass\""));
        assert!(one.contains("\"kind\":\"proved\""));
    }
}
