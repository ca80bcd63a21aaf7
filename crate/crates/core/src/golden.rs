//! Golden worst-term tables and their line-by-line comparison.
//!
//! A golden file stores the table lines `S; case-id; valuation; leading-terms`
//! for one chart together with the SHA-256 of their concatenation. Lines are
//! matched on the pair `(S, case-id)`, so a perturbed line shows up as one
//! entry naming both.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::wedge::cases::{dual_table, single_table};

pub const GOLDEN_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub schema_version: u32,
    pub chart: ChartSpec,
    pub content_hash: String,
    pub lines: Vec<String>,
}

/// Hex SHA-256 of the lines, each terminated by `\n`.
pub fn content_hash(lines: &[String]) -> String {
    let mut h = Sha256::new();
    for l in lines {
        h.update(l.as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// The table lines of `g_S` followed by those of the balanced differences.
pub fn worst_term_lines(chart: &ChartSpec) -> Vec<String> {
    let q = Field::Rationals;
    let single = single_table(q, chart.n, chart.kappa);
    let dual = dual_table(q, chart.n, chart.kappa);
    single.iter().chain(dual.iter()).map(|r| r.line()).collect()
}

impl GoldenFile {
    pub fn generate(chart: &ChartSpec) -> GoldenFile {
        GoldenFile::from_lines(*chart, worst_term_lines(chart))
    }

    pub fn from_lines(chart: ChartSpec, lines: Vec<String>) -> GoldenFile {
        GoldenFile { schema_version: GOLDEN_SCHEMA_VERSION, chart, content_hash: content_hash(&lines), lines }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("golden files serialize") + "\n"
    }

    pub fn from_json(src: &str) -> Result<GoldenFile> {
        let g: GoldenFile = serde_json::from_str(src)?;
        if g.schema_version != GOLDEN_SCHEMA_VERSION {
            return Err(Error::Golden(format!(
                "schema version {} is not the supported version {GOLDEN_SCHEMA_VERSION}",
                g.schema_version
            )));
        }
        Ok(g)
    }

    /// Whether the stored hash matches the stored lines.
    pub fn hash_is_consistent(&self) -> bool {
        content_hash(&self.lines) == self.content_hash
    }
}

/// One differing entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub set: String,
    pub case_id: String,
    pub golden: Option<String>,
    pub current: Option<String>,
}

impl fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: &Option<String>| x.clone().unwrap_or_else(|| "(missing)".into());
        write!(f, "S = {}, case {}: golden `{}`, current `{}`", self.set, self.case_id, show(&self.golden), show(&self.current))
    }
}

fn key(line: &str) -> (String, String) {
    let mut parts = line.splitn(3, "; ");
    let s = parts.next().unwrap_or("").to_string();
    let c = parts.next().unwrap_or("").to_string();
    (s, c)
}

/// Entries whose lines differ between `golden` and `current`, in the order
/// of first appearance. Empty iff the tables agree.
pub fn diff(golden: &GoldenFile, current: &GoldenFile) -> Result<Vec<DiffEntry>> {
    if golden.schema_version != current.schema_version {
        return Err(Error::Golden("schema versions differ".into()));
    }
    if golden.chart != current.chart {
        return Err(Error::Golden(format!("golden chart {} differs from current chart {}", golden.chart, current.chart)));
    }
    let index = |g: &GoldenFile| -> BTreeMap<(String, String), String> { g.lines.iter().map(|l| (key(l), l.clone())).collect() };
    let (old, new) = (index(golden), index(current));
    let mut order: Vec<(String, String)> = golden.lines.iter().map(|l| key(l)).collect();
    order.extend(current.lines.iter().map(|l| key(l)).filter(|k| !old.contains_key(k)));
    Ok(order
        .into_iter()
        .filter_map(|k| {
            let (a, b) = (old.get(&k).cloned(), new.get(&k).cloned());
            (a != b).then(|| DiffEntry { set: k.0, case_id: k.1, golden: a, current: b })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> GoldenFile {
        let chart = ChartSpec::new(5, 1).unwrap();
        GoldenFile::from_lines(chart, vec!["{1,2}; g(i); 0; 1*e{1,2}".into(), "{1,3}; dual(ii); -1; 2*e{1,3}".into()])
    }

    #[test]
    fn identical_files_have_empty_diff() {
        let g = fixture();
        assert!(diff(&g, &g.clone()).unwrap().is_empty());
        assert!(g.hash_is_consistent());
    }

    #[test]
    fn perturbed_sign_names_set_and_case() {
        let g = fixture();
        let mut lines = g.lines.clone();
        lines[1] = lines[1].replace("2*e", "-2*e");
        let cur = GoldenFile::from_lines(g.chart, lines);
        let d = diff(&g, &cur).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].set.as_str(), d[0].case_id.as_str()), ("{1,3}", "dual(ii)"));
        assert!(d[0].to_string().contains("S = {1,3}, case dual(ii)"));
    }

    #[test]
    fn schema_mismatch_is_an_error() {
        let mut g = fixture();
        g.schema_version = 99;
        assert!(GoldenFile::from_json(&g.to_json()).is_err());
    }
}
