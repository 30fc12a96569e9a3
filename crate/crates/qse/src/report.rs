//! Report structures shared by the inequality checks and verification suites.

use serde::Serialize;

use crate::entropy::EntropyParams;

/// Default slack allowed when asserting an inequality; overridable through
/// the `QSE_TOLERANCE` environment variable.
pub const DEFAULT_ASSERT_TOL: f64 = 1e-9;

/// Assertion tolerance, honoring `QSE_TOLERANCE` when set.
pub fn assertion_tolerance() -> f64 {
    std::env::var("QSE_TOLERANCE")
        .ok()
        .and_then(|v| v.parse::<f64>().ok())
        .filter(|t| t.is_finite() && *t >= 0.0)
        .unwrap_or(DEFAULT_ASSERT_TOL)
}

/// Parameter pair as serialized into reports.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QsParams {
    pub q: f64,
    pub s: f64,
}

impl From<&EntropyParams> for QsParams {
    fn from(p: &EntropyParams) -> Self {
        Self { q: p.q(), s: p.s() }
    }
}

/// One two-sided relation lhs <= mid <= rhs with its computed margins.
#[derive(Debug, Clone, Serialize)]
pub struct IneqMargin {
    pub label: String,
    pub lhs: f64,
    pub mid: f64,
    pub rhs: f64,
}

impl IneqMargin {
    pub fn new(label: impl Into<String>, lhs: f64, mid: f64, rhs: f64) -> Self {
        Self { label: label.into(), lhs, mid, rhs }
    }

    /// Largest amount by which the relation is violated (<= 0 when it holds).
    pub fn violation(&self) -> f64 {
        (self.lhs - self.mid).max(self.mid - self.rhs)
    }
}

/// Outcome of a single randomized or direct inequality check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Which statement was checked ("theorem1" .. "theorem5", "additivity", ...).
    pub theorem: String,
    pub params: QsParams,
    pub trials: usize,
    /// Largest observed violation; <= tolerance means the check holds.
    pub max_violation: f64,
    /// Whether the statement's hypotheses hold for this instance/parameters.
    /// Non-applicable checks are recorded but never counted as failures.
    pub applicable: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inequalities: Vec<IneqMargin>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(theorem: impl Into<String>, params: &EntropyParams) -> Self {
        Self {
            theorem: theorem.into(),
            params: params.into(),
            trials: 0,
            max_violation: 0.0,
            applicable: true,
            pass: true,
            inequalities: Vec::new(),
            note: None,
        }
    }
}

/// Aggregate result of a verification suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub d: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub violations: usize,
    pub max_violation: f64,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, d: Vec<usize>, trials: usize, seed: u64) -> Self {
        Self {
            suite: suite.into(),
            d,
            trials,
            seed,
            tolerance: assertion_tolerance(),
            violations: 0,
            max_violation: 0.0,
            pass: true,
            checks: Vec::new(),
        }
    }

    /// Fold a check into the aggregate; only applicable checks can fail.
    pub fn push(&mut self, check: CheckReport) {
        if check.applicable {
            if check.max_violation.is_finite() {
                self.max_violation = self.max_violation.max(check.max_violation);
            }
            if !check.pass {
                self.violations += 1;
                self.pass = false;
            }
        }
        self.checks.push(check);
    }
}
