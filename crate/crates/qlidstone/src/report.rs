//! Structured pass/fail reports for verification routines.
//!
//! Verification functions never panic on mathematical failure; they return a
//! [`Report`] whose clauses carry exact residuals, so a caller can render or
//! serialize the outcome.

use serde::Serialize;

/// Outcome of one checked clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified statement, identified by a stable id like "defining_system(3)".
#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub id: String,
    pub status: Status,
    /// Exact residual rendering for failed clauses; absent on passes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

/// A named bundle of clauses for one verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub q: String,
    pub n_max: usize,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(suite: impl Into<String>, family: Option<String>, q: String, n_max: usize) -> Self {
        Report { suite: suite.into(), family, q, n_max, clauses: Vec::new() }
    }

    /// Record one clause: pass when `residual` is None, fail otherwise.
    pub fn check(&mut self, id: impl Into<String>, residual: Option<String>) {
        let status = if residual.is_none() { Status::Pass } else { Status::Fail };
        self.clauses.push(Clause { id: id.into(), status, residual });
    }

    /// Record a boolean clause with a fixed message on failure.
    pub fn assert_true(&mut self, id: impl Into<String>, ok: bool, on_fail: impl Into<String>) {
        self.check(id, if ok { None } else { Some(on_fail.into()) });
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Fail)
    }

    /// Fold another report's clauses into this one, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.clauses {
            self.clauses.push(Clause { id: format!("{prefix}{}", c.id), ..c });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes_only_when_all_clauses_pass() {
        let mut r = Report::new("demo", None, "1/2".into(), 3);
        r.check("a", None);
        assert!(r.passed());
        r.assert_true("b", false, "residual 1/6");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.clauses[1].residual.as_deref(), Some("residual 1/6"));
    }

    #[test]
    fn serializes_without_residual_on_pass() {
        let mut r = Report::new("demo", Some("odd1".into()), "1".into(), 1);
        r.check("ok", None);
        let js = serde_json::to_string(&r).unwrap();
        assert!(js.contains("\"status\":\"pass\""));
        assert!(!js.contains("residual"));
    }
}
