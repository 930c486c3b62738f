//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIP")]
    Skip,
}

/// Outcome of one verification check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    /// Measured quantity the check compares against its tolerance
    /// (worst residual, minimum of a sign sweep, a located constant, ...).
    pub measured: f64,
    pub tolerance: f64,
    pub runtime_ms: u64,
    /// Offending point or parameters on FAIL.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub grid: usize,
    pub tol: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub provenance: Provenance,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(provenance: Provenance) -> Self {
        VerificationReport {
            provenance,
            checks: Vec::new(),
        }
    }

    /// Appends a result; check ids must be unique within a report.
    pub fn push(&mut self, result: CheckResult) -> Result<()> {
        if self.checks.iter().any(|c| c.id == result.id) {
            return Err(Error::Internal(format!("duplicate check id {}", result.id)));
        }
        self.checks.push(result);
        Ok(())
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}
