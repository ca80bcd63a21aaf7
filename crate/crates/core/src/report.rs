//! Machine-readable verification reports.
//!
//! Checks are sorted by identifier, so two reports of the same run differ
//! only in their `timing_ms` fields.

use serde::{Deserialize, Serialize};

use crate::chart::ChartSpec;
use crate::verify::{run_suites, Check, Status, Suite};

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const BUDGET: i32 = 3;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub chart: ChartSpec,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(chart: ChartSpec, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        Report { schema_version: SCHEMA_VERSION, chart, checks }
    }

    /// Runs `suites` on `chart`.
    pub fn run(chart: ChartSpec, suites: &[Suite]) -> Report {
        Report::new(chart, run_suites(&chart, suites))
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// `0` if every check passed, `1` if any failed, otherwise `3` when a
    /// budget was hit.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            exit::FAIL
        } else if self.checks.iter().any(|c| c.status == Status::SkippedBudget) {
            exit::BUDGET
        } else {
            exit::PASS
        }
    }

    /// The same report with every timing set to zero.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.timing_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// JSON with timings zeroed, for comparing runs.
    pub fn canonical_json(&self) -> String {
        self.without_timing().to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("chart (n, kappa) = {}\n", self.chart);
        for c in &self.checks {
            out.push_str(&c.text_line());
            out.push('\n');
        }
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        out.push_str(&format!(
            "{} passed, {} failed, {} skipped (budget)\n",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::SkippedBudget)
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::run_check;
    use crate::verify::Outcome;

    #[test]
    fn exit_codes_follow_statuses() {
        let chart = ChartSpec::new(5, 1).unwrap();
        let pass = run_check("b", "", || Ok(Outcome::pass()));
        let fail = run_check("a", "", || Ok(Outcome::fail("w")));
        let budget = run_check("c", "", || {
            Err(crate::GbError::Budget { kind: crate::BudgetKind::Pairs, limit: 1 })
        });
        assert_eq!(Report::new(chart, vec![pass.clone()]).exit_code(), exit::PASS);
        assert_eq!(Report::new(chart, vec![pass.clone(), budget.clone()]).exit_code(), exit::BUDGET);
        let r = Report::new(chart, vec![pass, budget, fail]);
        assert_eq!(r.exit_code(), exit::FAIL);
        let ids: Vec<&str> = r.checks.iter().map(|c| c.check_id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c"]);
    }

    #[test]
    fn json_round_trips() {
        let chart = ChartSpec::new(5, 1).unwrap();
        let r = Report::new(chart, vec![run_check("x", "claim", || Ok(Outcome::fail("w")))]);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back.checks[0].witness.as_deref(), Some("w"));
        assert_eq!(back.checks[0].status, Status::Fail);
        assert!(!r.to_json().contains("claim"));
    }
}
