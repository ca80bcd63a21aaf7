//! Verification suites. Each check records what it tests, its outcome, a
//! witness when it fails, and how long it took.
//!
//! A Groebner computation that exceeds its budget turns the check into
//! `skipped-budget` instead of failing it.

pub mod basis;
pub mod charts;
pub mod components;
pub mod integral;
pub mod jacobian;
pub mod simplify;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chart::ChartSpec;
use crate::error::GbError;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check_id: String,
    /// Plain-language statement of what is verified; text output only.
    #[serde(skip)]
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub timing_ms: u64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `[status] id: claim`, with the witness on a second line if present.
    pub fn text_line(&self) -> String {
        let mut s = format!("[{}] {}: {}", self.status, self.check_id, self.claim);
        if let Some(w) = &self.witness {
            s.push_str("\n    witness: ");
            s.push_str(w);
        }
        s
    }
}

/// What a check body reports back.
pub struct Outcome {
    pub pass: bool,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Outcome {
        Outcome { pass: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Outcome {
        Outcome { pass: false, witness: Some(witness.into()) }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(witness: Option<String>) -> Outcome {
        match witness {
            None => Outcome::pass(),
            Some(w) => Outcome::fail(w),
        }
    }

    /// Passes iff `ok`; the note is kept either way.
    pub fn with_note(ok: bool, note: impl Into<String>) -> Outcome {
        Outcome { pass: ok, witness: Some(note.into()) }
    }
}

/// Runs `body` and wraps its result as a [`Check`].
pub fn run_check(id: &str, claim: &str, body: impl FnOnce() -> Result<Outcome, GbError>) -> Check {
    let start = Instant::now();
    let (status, witness) = match body() {
        Ok(o) if o.pass => (Status::Pass, o.witness),
        Ok(o) => (Status::Fail, Some(o.witness.unwrap_or_else(|| "no witness recorded".into()))),
        Err(GbError::Budget { kind, limit }) => (Status::SkippedBudget, Some(format!("{kind} cap {limit} reached"))),
        Err(e) => (Status::Fail, Some(e.to_string())),
    };
    Check { check_id: id.into(), claim: claim.into(), status, witness, timing_ms: start.elapsed().as_millis() as u64 }
}

/// A selectable group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Basis,
    Simplify,
    Groebner,
    Components,
    Integral,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Basis, Suite::Simplify, Suite::Groebner, Suite::Components, Suite::Integral];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Basis => "basis",
            Suite::Simplify => "simplify",
            Suite::Groebner => "groebner",
            Suite::Components => "components",
            Suite::Integral => "integral",
        }
    }

    /// Whether the suite's statements need a strongly non-special level.
    pub fn needs_strongly_non_special(self) -> bool {
        !matches!(self, Suite::Basis)
    }

    pub fn run(self, chart: &ChartSpec) -> Vec<Check> {
        match self {
            Suite::Basis => basis::suite(chart),
            Suite::Simplify => simplify::suite(chart),
            Suite::Groebner => components::groebner_suite(chart.s(), 2 * chart.kappa),
            Suite::Components => {
                let mut out = components::suite(chart);
                out.extend(jacobian::suite(chart));
                out.extend(charts::suite(chart));
                out
            }
            Suite::Integral => integral::suite(chart),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs the selected suites concurrently; checks come back in suite order.
pub fn run_suites(chart: &ChartSpec, suites: &[Suite]) -> Vec<Check> {
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    suites.par_iter().map(|s| s.run(chart)).collect::<Vec<_>>().into_iter().flatten().collect()
}
