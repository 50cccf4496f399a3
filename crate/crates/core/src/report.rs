//! Serializable verification records.

use serde::{Deserialize, Serialize};

/// Outcome of checking one bracket identity over all admissible indices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub instances: u64,
    pub failures: u64,
    pub worst_residual: f64,
}

impl IdentityCheck {
    /// No admissible index combination exists (e.g. pair identities at n = 1).
    pub fn is_skipped(&self) -> bool {
        self.instances == 0
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub identities: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(IdentityCheck::passed)
    }

    pub fn total_failures(&self) -> u64 {
        self.identities.iter().map(|c| c.failures).sum()
    }

    pub fn get(&self, label: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|c| c.identity.starts_with(label))
    }
}

/// One line of a numerical sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub metric: Option<String>,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_found: Option<f64>,
    pub bound: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// A residual sweep: passes when `residual <= tol`.
    pub fn residual(check: &str, n: usize, trials: u64, residual: f64, tol: f64) -> Self {
        CheckRecord {
            check: check.to_string(),
            n,
            metric: None,
            trials,
            max_residual: Some(residual),
            max_found: None,
            bound: tol,
            pass: residual <= tol,
        }
    }

    /// An extremal search: passes when `found <= bound`.
    pub fn extremum(check: &str, n: usize, trials: u64, found: f64, bound: f64) -> Self {
        CheckRecord {
            check: check.to_string(),
            n,
            metric: None,
            trials,
            max_residual: None,
            max_found: Some(found),
            bound,
            pass: found <= bound,
        }
    }

    pub fn with_metric(mut self, metric: impl ToString) -> Self {
        self.metric = Some(metric.to_string());
        self
    }

    /// Overrides the pass flag for checks whose acceptance is not `<= bound`.
    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}
