//! Outcome of a verification pass, shared by every module.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    /// Number of identity instances evaluated.
    pub cases: usize,
    /// Largest discrepancy seen; exactly 0 on the exact backend when passed.
    pub worst_residual: f64,
    /// First failing instance, if any.
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport {
            passed: true,
            cases: 0,
            worst_residual: 0.0,
            failure: None,
        }
    }

    /// Record one instance with its residual and pass flag; the first
    /// failure message is kept.
    pub fn record(&mut self, ok: bool, residual: f64, what: impl FnOnce() -> String) {
        self.cases += 1;
        self.worst_residual = self.worst_residual.max(residual);
        if !ok {
            if self.failure.is_none() {
                self.failure = Some(what());
            }
            self.passed = false;
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.worst_residual = self.worst_residual.max(other.worst_residual);
        if !other.passed {
            self.passed = false;
            if self.failure.is_none() {
                self.failure = other.failure;
            }
        }
    }

    pub fn fail(mut self, msg: impl Into<String>) -> Self {
        self.passed = false;
        self.failure.get_or_insert(msg.into());
        self
    }
}

impl Default for CheckReport {
    fn default() -> Self {
        Self::new()
    }
}
