//! The decomposition `I = I₁ ∩ I₂` of the final ideal, the dimensions of the
//! pieces, and the explicit Groebner basis of `⟨∧²𝐁, 𝐁ᵗH𝐁⟩`.

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::groebner::{first_failing_pair, Ideal};
use crate::ideals::components::{ab_ring, claimed_basis, component1, component12, component2, diagonal_b_ring, raw_isotropic_generators, scheme, AbMatrices};
use crate::ring::MonomialOrder;

use super::simplify::equality_witness;
use super::{run_check, Check, Outcome};

/// The four ideals `I, I₁, I₂, I₁₂` over `ℚ[𝐀, 𝐁]` under grevlex.
pub struct ComponentIdeals {
    pub i: Ideal,
    pub i1: Ideal,
    pub i2: Ideal,
    pub i12: Ideal,
}

impl ComponentIdeals {
    pub fn new(chart: &ChartSpec) -> ComponentIdeals {
        let ring = ab_ring(chart, MonomialOrder::GrevLex, Field::Rationals);
        let m = AbMatrices::new(chart, &ring);
        ComponentIdeals {
            i: scheme(&m).ideal(),
            i1: component1(&m).ideal(),
            i2: component2(&m).ideal(),
            i12: component12(&m).ideal(),
        }
    }
}

/// Checks of the explicit basis for a `s × t` matrix `𝐁`.
pub fn groebner_suite(s: usize, t: usize) -> Vec<Check> {
    let tag = format!("{s}x{t}");
    if s == 0 || t == 0 {
        return vec![run_check(&format!("groebner.{tag}"), "the matrix B is empty, nothing to check", || Ok(Outcome::pass()))];
    }
    let ring = diagonal_b_ring(s, t, Field::Rationals);
    let claimed = claimed_basis(&ring, s, t);
    let engine = Ideal::new(&ring, raw_isotropic_generators(&ring, s, t));
    let mut out = Vec::new();
    out.push(run_check(
        &format!("groebner.criterion.{tag}"),
        "every S-polynomial of the 2-minors and the f_ab reduces to zero under the diagonal lex order",
        || {
            Ok(Outcome::from_witness(
                first_failing_pair(&claimed).map(|(i, j, r)| format!("S({}, {}) reduces to {r}", claimed[i], claimed[j])),
            ))
        },
    ));
    out.push(run_check(
        &format!("groebner.matches-engine.{tag}"),
        "the 2-minors and f_ab generate <wedge^2 B, B^t H B> and have the same leading monomials as its reduced basis",
        || {
            let claimed_ideal = Ideal::new(&ring, claimed.clone());
            if let Some(w) = equality_witness(&claimed_ideal, &engine)? {
                return Ok(Outcome::fail(w));
            }
            let mut lead_claimed: Vec<_> = claimed.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
            let mut lead_engine: Vec<_> = engine.basis()?.iter().filter_map(|g| g.leading_monomial().cloned()).collect();
            lead_claimed.sort_by(|a, b| a.exponents().cmp(b.exponents()));
            lead_claimed.dedup();
            lead_engine.sort_by(|a, b| a.exponents().cmp(b.exponents()));
            if lead_claimed != lead_engine {
                return Ok(Outcome::fail(format!(
                    "{} distinct leading monomials claimed, reduced basis has {}",
                    lead_claimed.len(),
                    lead_engine.len()
                )));
            }
            Ok(Outcome::with_note(true, format!("{} elements", lead_engine.len())))
        },
    ));
    out.push(run_check(
        &format!("groebner.squarefree.{tag}"),
        "the initial ideal of I_12 is square-free",
        || {
            let init = engine.initial_ideal()?;
            Ok(match init.generators().iter().find(|m| !m.is_squarefree()) {
                None => Outcome::pass(),
                Some(m) => Outcome::fail(format!("leading monomial with exponents {:?}", m.exponents())),
            })
        },
    ));
    out
}

pub fn suite(chart: &ChartSpec) -> Vec<Check> {
    let c = ComponentIdeals::new(chart);
    let n = chart.n;
    let mut out = Vec::new();
    out.push(run_check("components.intersection", "I equals the intersection of I_1 and I_2", || {
        let cap = c.i1.intersect(&c.i2)?;
        Ok(Outcome::from_witness(equality_witness(&c.i, &cap)?))
    }));
    out.push(run_check("components.sum", "I_1 + I_2 equals I_12 = <A, wedge^2 B, B^t H B>", || {
        Ok(Outcome::from_witness(equality_witness(&c.i1.sum(&c.i2), &c.i12)?))
    }));
    out.push(run_check(
        "components.dimensions",
        "I, I_1 and I_2 have dimension n-1 and I_1 + I_2 has dimension n-2",
        || {
            let dims = [c.i.dimension()?, c.i1.dimension()?, c.i2.dimension()?, c.i1.sum(&c.i2).dimension()?];
            let expected = [n - 1, n - 1, n - 1, n - 2];
            let note = format!("dims (I, I_1, I_2, I_1+I_2) = {dims:?}, expected {expected:?}");
            Ok(Outcome::with_note(dims == expected, note))
        },
    ));
    out.push(run_check("components.sandwich", "the product I_1 I_2 lies in I", || {
        Ok(Outcome::from_witness(c.i.first_non_member(c.i1.product(&c.i2).generators())?.map(|g| format!("{g} is not in I"))))
    }));
    out.push(run_check("components.distinct", "neither of I_1, I_2 contains the other", || {
        let a = c.i2.first_non_member(c.i1.generators())?.cloned();
        let b = c.i1.first_non_member(c.i2.generators())?.cloned();
        Ok(match (a, b) {
            (Some(x), Some(y)) => Outcome::with_note(true, format!("{x} is not in I_2; {y} is not in I_1")),
            (None, _) => Outcome::fail("I_1 is contained in I_2"),
            (_, None) => Outcome::fail("I_2 is contained in I_1"),
        })
    }));
    out
}
