//! Charts outside the strongly non-special range where the simplification
//! chain still applies: `κ = 0`, where `𝐁` is empty, and `n = 2m`,
//! `κ = m − 1`, where `𝐀` is `2 × 2`.

use ulm_core::ideals::select::Which;
use ulm_core::verify::simplify;
use ulm_core::{ChartSpec, Family, Field};

fn chain_holds(n: usize, k: usize) {
    let checks = simplify::suite(&ChartSpec::new(n, k).unwrap());
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).map(|c| &c.check_id).collect();
    assert!(failed.is_empty(), "({n},{k}): {failed:?}");
}

#[test]
fn kappa_zero_reduces_to_symmetric_rank_one() {
    chain_holds(5, 0);
    let f = Which::Final.build(&ChartSpec::new(5, 0).unwrap(), Field::Rationals);
    assert!(f.ring.vars().iter().all(|v| v.family == Family::A));
    assert_eq!(f.ring.nvars(), 25);
    // 2-minors of a 5 x 5 matrix, off-diagonal entries of A - A^t, one trace.
    assert_eq!(f.source_counts(), [("wedge".to_string(), 100), ("symmetry".to_string(), 20), ("trace".to_string(), 1)]);
}

#[test]
fn almost_pi_modular_has_two_by_two_a() {
    chain_holds(6, 2);
    let f = Which::Final.build(&ChartSpec::new(6, 2).unwrap(), Field::Rationals);
    assert_eq!(f.ring.vars().iter().filter(|v| v.family == Family::A).count(), 4);
    assert_eq!(f.ring.vars().iter().filter(|v| v.family == Family::B).count(), 8);
}
