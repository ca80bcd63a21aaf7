//! Property tests for the polynomial layer, the Groebner engine, the sign
//! and wedge calculus, and the lattice membership rule.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ulm_core::golden::{self, GoldenFile};
use ulm_core::groebner::{groebner_basis, is_reduced_basis, reduce, Budget};
use ulm_core::laurent::LaurentPi;
use ulm_core::text::parse_poly;
use ulm_core::wedge::element::wedge_expand;
use ulm_core::wedge::index::IndexSet;
use ulm_core::wedge::lattice::{RuleVariant, SpinLattice};
use ulm_core::{ChartSpec, Field, Ideal, Monomial, MonomialOrder, Poly, Ring, Var};

fn ring(order: MonomialOrder) -> Arc<Ring> {
    Ring::rational((1..=3).map(|i| Var::x(1, i)).collect(), order)
}

/// Polynomials in three variables with small coefficients and degree ≤ 3.
fn poly_strategy(r: Arc<Ring>) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 0u16..=2, 0u16..=2, 0u16..=1), 0..5).prop_map(move |terms| {
        let f = r.field();
        Poly::from_terms(&r, terms.into_iter().map(|(c, a, b, d)| (Monomial::from_exponents(vec![a, b, d]), f.from_i64(c))).collect())
    })
}

fn grevlex() -> Arc<Ring> {
    ring(MonomialOrder::GrevLex)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(grevlex()), b in poly_strategy(grevlex()), c in poly_strategy(grevlex())) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_round_trip(a in poly_strategy(grevlex())) {
        let r = grevlex();
        prop_assert_eq!(parse_poly(&r, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn reduction_is_idempotent_and_stays_in_the_coset(
        gens in prop::collection::vec(poly_strategy(grevlex()), 1..3),
        f in poly_strategy(grevlex()),
    ) {
        let g = groebner_basis(&gens, &Budget::default()).unwrap();
        prop_assert!(is_reduced_basis(&g));
        let r = reduce(&f, &g);
        prop_assert_eq!(reduce(&r, &g), r.clone());
        let ideal = Ideal::new(&grevlex(), gens);
        prop_assert!(ideal.contains(&(&f - &r)).unwrap());
    }

    #[test]
    fn basis_does_not_depend_on_generator_order(gens in prop::collection::vec(poly_strategy(grevlex()), 1..4)) {
        let mut rev = gens.clone();
        rev.reverse();
        let a = groebner_basis(&gens, &Budget::default()).unwrap();
        let b = groebner_basis(&rev, &Budget::default()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lex_and_grevlex_agree_on_the_ideal(gens in prop::collection::vec(poly_strategy(grevlex()), 1..3)) {
        let g = Ideal::new(&grevlex(), gens.clone());
        let lex_ring = ring(MonomialOrder::Lex);
        let l = Ideal::new(&lex_ring, gens.iter().map(|p| p.map_into(&lex_ring).unwrap()));
        prop_assert_eq!(g.is_unit().unwrap(), l.is_unit().unwrap());
        prop_assume!(!g.is_unit().unwrap());
        prop_assert_eq!(g.dimension().unwrap(), l.dimension().unwrap());
        for p in l.basis().unwrap() {
            prop_assert!(g.contains(&p.map_into(&grevlex()).unwrap()).unwrap());
        }
    }

    #[test]
    fn sign_formula_matches_inversions(n in 1usize..=10, seed in any::<u64>()) {
        let all = IndexSet::all(n);
        let s = all[(seed % all.len() as u64) as usize];
        let m = s.members();
        let mut seq = m.clone();
        seq.extend((1..=2 * n).filter(|k| !m.contains(k)));
        let inv = (0..seq.len()).flat_map(|a| (a + 1..seq.len()).map(move |b| (a, b))).filter(|&(a, b)| seq[a] > seq[b]).count();
        let expected = if inv % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(s.sign_by_parity(), expected);
        prop_assert_eq!(s.sign_by_formula(), expected);
    }

    #[test]
    fn wedge_coefficients_are_minors(entries in prop::collection::vec(-3i64..=3, 18)) {
        // Three vectors in a six-dimensional space.
        let q = Field::Rationals;
        let rows: Vec<Vec<LaurentPi>> = entries.chunks(6).map(|r| r.iter().map(|&x| LaurentPi::from_i64(q, x)).collect()).collect();
        let w = wedge_expand(q, &rows);
        for t in IndexSet::all(3) {
            let cols: Vec<usize> = t.members().iter().map(|k| k - 1).collect();
            let m = |i: usize, j: usize| entries[6 * i + cols[j]];
            let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
            prop_assert_eq!(w.coefficient(&t), LaurentPi::from_i64(q, det));
        }
    }
}

fn lattice(n: usize, k: usize) -> &'static SpinLattice {
    static L51: OnceLock<SpinLattice> = OnceLock::new();
    static L61: OnceLock<SpinLattice> = OnceLock::new();
    let cell = if (n, k) == (5, 1) { &L51 } else { &L61 };
    cell.get_or_init(|| SpinLattice::new(Field::Rationals, n, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn valuation_rule_matches_brute_force(seed in any::<u64>(), which in 0usize..2) {
        let (n, k) = [(5, 1), (6, 1)][which];
        let l = lattice(n, k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = l.random_probe(&mut rng);
        prop_assert_eq!(l.rule_membership(&a, RuleVariant::Corrected), l.brute_membership(&a));
        let member = l.random_member(&mut rng);
        prop_assert!(l.brute_membership(&member));
        prop_assert!(l.rule_membership(&member, RuleVariant::Corrected));
    }

    #[test]
    fn golden_diff_names_the_perturbed_line(idx in any::<prop::sample::Index>()) {
        static LINES: OnceLock<Vec<String>> = OnceLock::new();
        let lines = LINES.get_or_init(|| golden::worst_term_lines(&ChartSpec::new(5, 1).unwrap()));
        let chart = ChartSpec::new(5, 1).unwrap();
        let g = GoldenFile::from_lines(chart, lines.clone());
        let k = idx.index(lines.len());
        let mut perturbed = lines.clone();
        // Flip the sign of the first leading coefficient.
        let (head, terms) = lines[k].rsplit_once("; ").unwrap();
        let flipped = terms.strip_prefix('-').map(str::to_string).unwrap_or_else(|| format!("-{terms}"));
        perturbed[k] = format!("{head}; {flipped}");
        let d = golden::diff(&g, &GoldenFile::from_lines(chart, perturbed)).unwrap();
        prop_assert_eq!(d.len(), 1);
        let mut parts = lines[k].split("; ");
        prop_assert_eq!(Some(d[0].set.as_str()), parts.next());
        prop_assert_eq!(Some(d[0].case_id.as_str()), parts.next());
    }
}
