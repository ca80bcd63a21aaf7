//! The simplification chain on the special fiber: the full ideal, its three
//! successive simplifications, and the final presentation in `𝐀, 𝐁`.

use std::sync::Arc;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::error::GbError;
use crate::groebner::Ideal;
use crate::ideals::components::{ab_ring, bottom_to_ab, scheme, AbMatrices};
use crate::ideals::special::{self, bottom_ring, final_bottom};
use crate::ideals::{chart_variables, special_ring, upper_block_size, ChartMatrices};
use crate::poly::Poly;
use crate::ring::{MonomialOrder, OrderKind, Ring};

use super::{run_check, Check, Outcome};

/// `k[X]` with `X_1, X_2` eliminated first.
pub fn special_elimination_ring(chart: &ChartSpec, field: Field) -> Arc<Ring> {
    let k = upper_block_size(chart);
    let order = MonomialOrder::elimination(k, chart.n * chart.n - k, OrderKind::GrevLex);
    Ring::new(chart_variables(chart), order, field).expect("valid ring")
}

/// `None` if the ideals agree, otherwise a generator of one missing from the other.
pub fn equality_witness(a: &Ideal, b: &Ideal) -> Result<Option<String>, GbError> {
    if let Some(g) = b.first_non_member(a.generators())? {
        return Ok(Some(format!("{g} lies in the first ideal but not the second")));
    }
    if let Some(g) = a.first_non_member(b.generators())? {
        return Ok(Some(format!("{g} lies in the second ideal but not the first")));
    }
    Ok(None)
}

fn membership_witness(ideal: &Ideal, fs: &[Poly]) -> Result<Option<String>, GbError> {
    Ok(ideal.first_non_member(fs)?.map(|g| format!("{g} is not a member")))
}

pub fn suite(chart: &ChartSpec) -> Vec<Check> {
    let q = Field::Rationals;
    let ring = special_ring(chart, q);
    let cm = ChartMatrices::new(chart, &ring);
    let full = special::full(&cm).ideal();
    let step1 = special::step1(&cm).ideal();
    let step2 = special::step2(&cm).ideal();
    let step3 = special::step3(&cm);
    let step3_ideal = step3.ideal();

    let mut out = Vec::new();
    out.push(run_check("simplify.full-step1", "the full special-fiber ideal equals its first simplification", || {
        Ok(Outcome::from_witness(equality_witness(&full, &step1)?))
    }));
    out.push(run_check("simplify.step1-step2", "the first and second simplifications agree", || {
        Ok(Outcome::from_witness(equality_witness(&step1, &step2)?))
    }));
    out.push(run_check(
        "simplify.step2-step3",
        "replacing the wedge of X by the wedge of its bottom rows does not change the ideal",
        || Ok(Outcome::from_witness(equality_witness(&step2, &step3_ideal)?)),
    ));
    out.push(run_check(
        "simplify.step3-eliminated",
        "eliminating X_1 and X_2 leaves exactly the final ideal in X_3, X_4",
        || {
            let elim_ring = special_elimination_ring(chart, q);
            let lifted = Ideal::new(&elim_ring, step3_ideal.generators().iter().map(|g| g.map_into(&elim_ring).expect("same variables")));
            let target = bottom_ring(chart, q);
            let eliminated = lifted.eliminate_leading(upper_block_size(chart), &target)?;
            let fin = final_bottom(chart, &target).ideal();
            Ok(Outcome::from_witness(equality_witness(&eliminated, &fin)?))
        },
    ));
    out.push(run_check(
        "simplify.step3-substituted",
        "substituting X_1 = -1/2 J X_3^t H X_3 and X_2 = 0 maps every generator of the full ideal into the final ideal",
        || {
            let target = bottom_ring(chart, q);
            let images = special::step3_substitution(chart, &target);
            let fin = final_bottom(chart, &target).ideal();
            let mapped: Vec<Poly> = full.generators().iter().map(|g| g.substitute(&target, &images)).collect();
            Ok(Outcome::from_witness(membership_witness(&fin, &mapped)?))
        },
    ));
    out.push(run_check("simplify.zeros", "X_4 X_3, X_4^2 and X_1^2 vanish on the special fiber", || {
        Ok(Outcome::from_witness(membership_witness(&full, &special::corollary_zeros(&cm))?))
    }));
    out.push(run_check("simplify.ehf", "E H F^t - F H E^t vanishes on the special fiber", || {
        Ok(Outcome::from_witness(membership_witness(&full, &special::ehf_relation(&cm))?))
    }));
    out.push(run_check(
        "simplify.final-ab",
        "under X_3 = B and X_4 = A H the final ideal becomes <wedge^2(A,B), A - A^t, tr(AH)>",
        || {
            let ab = ab_ring(chart, MonomialOrder::GrevLex, q);
            let m = AbMatrices::new(chart, &ab);
            let images = bottom_to_ab(chart, &m, &Poly::zero(&ab));
            let target = bottom_ring(chart, q);
            let fin = final_bottom(chart, &target);
            let mapped = Ideal::new(&ab, fin.polys().iter().map(|g| g.substitute(&ab, &images)));
            Ok(Outcome::from_witness(equality_witness(&mapped, &scheme(&m).ideal())?))
        },
    ));
    out
}
