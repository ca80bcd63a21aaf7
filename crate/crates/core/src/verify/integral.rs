//! The integral chart ideal over `ℚ[π]`: elimination of the top rows, the
//! presentation in `𝐀, 𝐁, π`, and the Kottwitz and wedge conditions.

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::groebner::Ideal;
use crate::ideals::components::{ab_pi_ring, AbMatrices};
use crate::ideals::integral::{
    self, bottom_pi_ring, bottom_pi_to_ab, bottom_pi_to_ab_left, final_ab, intermediate, kottwitz_differences,
    wedge_relations,
};
use crate::ideals::{integral_elimination_ring, integral_ring, upper_block_size, ChartMatrices};
use crate::poly::Poly;
use crate::ring::MonomialOrder;

use super::simplify::equality_witness;
use super::{run_check, Check, Outcome};

/// The intermediate ideal in `X_3, X_4, π` mapped to `k[𝐀, 𝐁, π]` under
/// `images`.
fn mapped_intermediate(chart: &ChartSpec, images: impl Fn(&AbMatrices) -> Vec<Poly>) -> (Ideal, Ideal) {
    let q = Field::Rationals;
    let ab = ab_pi_ring(chart, MonomialOrder::GrevLex, q);
    let m = AbMatrices::new(chart, &ab);
    let src = bottom_pi_ring(chart, q);
    let img = images(&m);
    let mapped = Ideal::new(&ab, intermediate(chart, &src).polys().iter().map(|g| g.substitute(&ab, &img)));
    (mapped, final_ab(&m).ideal())
}

pub fn suite(chart: &ChartSpec) -> Vec<Check> {
    let q = Field::Rationals;
    let ring = integral_ring(chart, MonomialOrder::GrevLex, q);
    let cm = ChartMatrices::new(chart, &ring);
    let full = integral::full(&cm).ideal();
    let no_wedge = integral::without_wedge(&cm).ideal();

    let mut out = Vec::new();
    out.push(run_check(
        "integral.eliminated",
        "eliminating X_1 and X_2 from the integral ideal leaves <wedge^2(X_3, X_4 + pi), X_4 - X_4^ad, tr X_4 + (n - 2k - 2) pi>",
        || {
            let elim = integral_elimination_ring(chart, q);
            let lifted = Ideal::new(&elim, full.generators().iter().map(|g| g.map_into(&elim).expect("same variables")));
            let target = bottom_pi_ring(chart, q);
            let eliminated = lifted.eliminate_leading(upper_block_size(chart), &target)?;
            Ok(Outcome::from_witness(equality_witness(&eliminated, &intermediate(chart, &target).ideal())?))
        },
    ));
    out.push(run_check(
        "integral.final-ab",
        "under A = (X_4 + pi) H and B = X_3 the eliminated ideal becomes <wedge^2(A, B), A - A^t, tr(AH) - 2 pi>",
        || {
            let (mapped, target) = mapped_intermediate(chart, |m| bottom_pi_to_ab(chart, m));
            Ok(Outcome::from_witness(equality_witness(&mapped, &target)?))
        },
    ));
    out.push(run_check(
        "integral.left-variant",
        "the reading A = H (X_4 + pi) is recorded for comparison",
        || {
            let (mapped, target) = mapped_intermediate(chart, |m| bottom_pi_to_ab_left(chart, m));
            let note = match equality_witness(&mapped, &target)? {
                None => "also gives the final ideal".to_string(),
                Some(w) => format!("does not give the final ideal: {w}"),
            };
            Ok(Outcome::with_note(true, note))
        },
    ));
    out.push(run_check(
        "integral.kottwitz",
        "the coefficients of det(T - X) - (T + pi)^(n-1) (T - pi) lie in the integral ideal",
        || {
            let diffs = kottwitz_differences(&cm, 1);
            if let Some(g) = full.first_non_member(&diffs)? {
                return Ok(Outcome::fail(format!("{g} is not a member")));
            }
            let opposite = kottwitz_differences(&cm, -1);
            let note = match full.first_non_member(&opposite)? {
                Some(_) => "the opposite sign (T - pi)^(n-1) (T + pi) fails",
                None => "the opposite sign also holds",
            };
            Ok(Outcome::with_note(true, note))
        },
    ));
    out.push(run_check(
        "integral.wedge",
        "the 2-minors of X + pi lie in the integral ideal and are not implied by the other relations",
        || {
            let (w2, _) = wedge_relations(&cm);
            if let Some(g) = full.first_non_member(&w2)? {
                return Ok(Outcome::fail(format!("{g} is not a member")));
            }
            Ok(match no_wedge.first_non_member(&w2)? {
                Some(g) => Outcome::with_note(true, format!("{g} needs the wedge relations")),
                None => Outcome::fail("every 2-minor of X + pi already follows from the other relations"),
            })
        },
    ));
    out.push(run_check(
        "integral.determinant",
        "det(X - pi) follows from the relations without the wedge conditions",
        || {
            let (_, det) = wedge_relations(&cm);
            Ok(Outcome::from_witness((!no_wedge.contains(&det)?).then(|| format!("{det} is not a member"))))
        },
    ));
    out
}
