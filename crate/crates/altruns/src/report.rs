//! Structured results for the cross-validation suite.
//!
//! A [`VerificationReport`] is a flat list of named [`Check`]s plus an
//! overall verdict, and serializes to stable JSON for the CLI's
//! `verify --format json`.

use serde::Serialize;

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check was requested but could not run on this configuration
    /// (e.g. an oracle comparison with the cap below the smallest row).
    Skipped,
}

/// One named check over a stated range.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    /// Stable machine name, e.g. `"recurrence-vs-oracle"`.
    pub name: String,
    /// Human-readable range the check covered, e.g. `"n = 2..=9"`.
    pub range: String,
    pub status: Status,
    /// Coordinates of the first disagreement, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    /// One line of context: what was compared, or how it failed.
    pub detail: String,
}

impl Check {
    pub fn pass(name: &str, range: String, detail: String) -> Self {
        Check {
            name: name.into(),
            range,
            status: Status::Pass,
            first_failure: None,
            detail,
        }
    }

    pub fn fail(name: &str, range: String, first_failure: String, detail: String) -> Self {
        Check {
            name: name.into(),
            range,
            status: Status::Fail,
            first_failure: Some(first_failure),
            detail,
        }
    }

    pub fn skipped(name: &str, range: String, detail: String) -> Self {
        Check {
            name: name.into(),
            range,
            status: Status::Skipped,
            first_failure: None,
            detail,
        }
    }
}

/// Results of a full verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    /// `true` iff no check failed (skipped checks do not fail the run).
    pub overall: bool,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.status != Status::Fail);
        VerificationReport { checks, overall }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_reflects_failures_only() {
        let ok = VerificationReport::from_checks(vec![
            Check::pass("a", "n = 2..=5".into(), "ok".into()),
            Check::skipped("b", "-".into(), "cap too low".into()),
        ]);
        assert!(ok.overall);

        let bad = VerificationReport::from_checks(vec![
            Check::pass("a", "n = 2..=5".into(), "ok".into()),
            Check::fail("b", "n = 2..=5".into(), "(4,2)".into(), "mismatch".into()),
        ]);
        assert!(!bad.overall);
        assert_eq!(bad.failures().count(), 1);
    }

    #[test]
    fn json_shape_is_stable() {
        let report = VerificationReport::from_checks(vec![Check::pass(
            "recurrence-vs-oracle",
            "n = 2..=9".into(),
            "cellwise equal".into(),
        )]);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["overall"], true);
        assert_eq!(json["checks"][0]["name"], "recurrence-vs-oracle");
        assert_eq!(json["checks"][0]["status"], "pass");
        assert!(json["checks"][0].get("first_failure").is_none());
    }
}
