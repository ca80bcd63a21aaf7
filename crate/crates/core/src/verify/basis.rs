//! Sign calculus, worst-term tables and the spin basis, all checked against
//! brute-force expansion.

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::wedge::cases::{dual_table, single_table, WorstTermRow};
use crate::wedge::index::IndexSet;
use crate::wedge::lattice::check_spin_basis;

use super::{run_check, Check, Outcome};

/// Seed for the random combinations drawn by the spin-basis check.
pub const SPIN_SEED: u64 = 0x5eed_2024;
pub const SPIN_SAMPLES: usize = 40;

/// First set `S` (over all `n' ≤ max_n`) whose permutation parity disagrees
/// with `(−1)^{ΣS + ⌈n'/2⌉}`.
pub fn sign_mismatch(max_n: usize) -> Option<IndexSet> {
    (1..=max_n).flat_map(IndexSet::all).find(|s| s.sign_by_parity() != s.sign_by_formula())
}

/// Rows that disagree with the corrected closed forms, and rows where the
/// stated form fails without a recorded correction.
pub fn table_witness(rows: &[WorstTermRow]) -> Option<String> {
    if let Some(r) = rows.iter().find(|r| !r.matches) {
        return Some(format!("{} ({})", r.line(), r.mismatch.as_deref().unwrap_or("")));
    }
    if let Some(r) = rows.iter().find(|r| !r.literal_matches && r.erratum.is_none()) {
        return Some(format!("{}: stated form fails without a recorded correction", r.line()));
    }
    None
}

/// Summary of rows where only the corrected form matches.
pub fn errata_note(rows: &[WorstTermRow]) -> String {
    let mut notes: Vec<(&str, usize)> = Vec::new();
    for r in rows.iter().filter(|r| !r.literal_matches) {
        let e = r.erratum.unwrap_or("unrecorded");
        match notes.iter_mut().find(|(x, _)| *x == e) {
            Some((_, c)) => *c += 1,
            None => notes.push((e, 1)),
        }
    }
    let mut s = format!("{} rows match", rows.iter().filter(|r| r.matches).count());
    for (e, c) in notes {
        s.push_str(&format!("; {c} rows need correction {e}"));
    }
    s
}

pub fn suite(chart: &ChartSpec) -> Vec<Check> {
    let (n, k) = (chart.n, chart.kappa);
    let q = Field::Rationals;
    let sign_n = n.clamp(6, 10);
    let mut out = vec![run_check(
        "basis.sign",
        &format!("sign of sigma_S equals (-1)^(sum S + ceil(n/2)) for every n-subset, n <= {sign_n}"),
        || Ok(Outcome::from_witness(sign_mismatch(sign_n).map(|s| format!("S = {s}")))),
    )];
    out.push(run_check("basis.worst-terms.single", "brute-force worst terms of g_S match the six closed forms", || {
        let rows = single_table(q, n, k);
        Ok(match table_witness(&rows) {
            Some(w) => Outcome::fail(w),
            None => Outcome::with_note(true, errata_note(&rows)),
        })
    }));
    out.push(run_check(
        "basis.worst-terms.dual",
        "brute-force worst terms of g_S - sgn(sigma_S) g_(S perp) match the twelve closed forms",
        || {
            let rows = dual_table(q, n, k);
            Ok(match table_witness(&rows) {
                Some(w) => Outcome::fail(w),
                None => Outcome::with_note(true, errata_note(&rows)),
            })
        },
    ));
    out.push(run_check(
        "basis.spin-basis",
        "the listed elements form a basis of the special-fiber image of the spin lattice, and the valuation rule decides membership",
        || {
            let r = check_spin_basis(q, n, k, SPIN_SAMPLES, SPIN_SEED);
            let c = &r.corrected;
            let note = format!(
                "{} elements, rank {}, image dimension {}; {} integral combinations reduced; rule agreed on {} probes; stated list: {} elements, {} outside the image, rank {}",
                c.len,
                c.rank,
                c.image_dim,
                r.combinations_checked - r.combinations_failed,
                r.rule_samples - r.rule_disagreements,
                r.stated.len,
                r.stated.non_members.len(),
                r.stated.rank
            );
            if r.passed() {
                return Ok(Outcome::with_note(true, note));
            }
            let w = c.non_members.first().cloned().unwrap_or(note);
            Ok(Outcome::fail(w))
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_formula_holds_up_to_six() {
        assert_eq!(sign_mismatch(6), None);
    }
}
