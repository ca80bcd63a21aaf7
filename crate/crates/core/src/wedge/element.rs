//! Elements of `∧ⁿ V` in the basis `e_S`, with Laurent coefficients in `π`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coeff, Field};
use crate::laurent::{LaurentPi, Valuation};

use super::index::IndexSet;

/// Coordinates of a vector of `V` in the basis `e_1, …, e_{2n}`.
pub type BasisVector = Vec<LaurentPi>;

/// `sum_S c_S e_S`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeElement {
    n: usize,
    field: Field,
    terms: BTreeMap<IndexSet, LaurentPi>,
}

impl WedgeElement {
    pub fn zero(n: usize, field: Field) -> WedgeElement {
        WedgeElement { n, field, terms: BTreeMap::new() }
    }

    /// `c · e_S`.
    pub fn basis(s: IndexSet, c: LaurentPi) -> WedgeElement {
        let mut w = WedgeElement::zero(s.n(), c.field());
        w.add_term(s, &c);
        w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &LaurentPi)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &IndexSet) -> LaurentPi {
        self.terms.get(s).cloned().unwrap_or_else(|| LaurentPi::zero(self.field))
    }

    pub fn add_term(&mut self, s: IndexSet, c: &LaurentPi) {
        assert_eq!(s.n(), self.n, "index set of the wrong size");
        let v = match self.terms.get(&s) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, v);
        }
    }

    pub fn add(&self, o: &WedgeElement) -> WedgeElement {
        let mut r = self.clone();
        for (s, c) in &o.terms {
            r.add_term(*s, c);
        }
        r
    }

    pub fn neg(&self) -> WedgeElement {
        WedgeElement { n: self.n, field: self.field, terms: self.terms.iter().map(|(s, c)| (*s, c.neg())).collect() }
    }

    pub fn sub(&self, o: &WedgeElement) -> WedgeElement {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &LaurentPi) -> WedgeElement {
        let mut r = WedgeElement::zero(self.n, self.field);
        for (s, x) in &self.terms {
            r.add_term(*s, &x.mul(c));
        }
        r
    }

    pub fn scale_coeff(&self, c: &Coeff) -> WedgeElement {
        self.scale(&LaurentPi::term(c.clone(), 0))
    }

    /// Multiplies every coefficient by `π^k`.
    pub fn shift(&self, k: i32) -> WedgeElement {
        WedgeElement { n: self.n, field: self.field, terms: self.terms.iter().map(|(s, c)| (*s, c.shift(k))).collect() }
    }

    /// Minimal `ord_π` over all coefficients.
    pub fn valuation(&self) -> Valuation {
        self.terms.values().map(|c| c.valuation()).min().unwrap_or(Valuation::Infinity)
    }

    /// Every coefficient has nonnegative valuation.
    pub fn is_integral(&self) -> bool {
        self.valuation() >= Valuation::Finite(0)
    }

    /// All terms truncated to exponents `≤ k`.
    pub fn truncate_above(&self, k: i32) -> WedgeElement {
        let mut r = WedgeElement::zero(self.n, self.field);
        for (s, c) in &self.terms {
            r.add_term(*s, &c.truncate_above(k));
        }
        r
    }

    /// The worst-term part: the sum of `c_S e_S` over the `S` whose
    /// coefficient attains the minimal valuation. Full coefficients are kept.
    ///
    /// Returns `None` for zero.
    pub fn worst_terms(&self) -> Option<WedgeElement> {
        let v = self.valuation();
        v.finite()?;
        let mut r = WedgeElement::zero(self.n, self.field);
        for (s, c) in &self.terms {
            if c.valuation() == v {
                r.add_term(*s, c);
            }
        }
        Some(r)
    }

    /// The part of valuation exactly `k`, as constants: `S ↦ coeff of π^k`.
    pub fn layer(&self, k: i32) -> BTreeMap<IndexSet, Coeff> {
        self.terms
            .iter()
            .filter_map(|(s, c)| {
                let x = c.coeff(k);
                (!x.is_zero()).then_some((*s, x))
            })
            .collect()
    }

    /// Reduction modulo `π` of an integral element.
    pub fn reduction(&self) -> BTreeMap<IndexSet, Coeff> {
        debug_assert!(self.is_integral());
        self.layer(0)
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| format!("({c})*e{s}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Expands `v_1 ∧ ⋯ ∧ v_k` for vectors of length `2n`, keyed by bit masks.
///
/// The coefficient of `e_T` (`T` listed increasingly) is the `k × k` minor of
/// the coordinate matrix on the columns `T`.
pub(crate) fn expand_masks(field: Field, rows: &[BasisVector]) -> BTreeMap<u64, LaurentPi> {
    let mut acc: BTreeMap<u64, LaurentPi> = BTreeMap::new();
    acc.insert(0, LaurentPi::from_i64(field, 1));
    for v in rows {
        let mut next: BTreeMap<u64, LaurentPi> = BTreeMap::new();
        for (mask, c) in &acc {
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() || mask & (1 << k) != 0 {
                    continue;
                }
                // Appending e_{k+1} on the right and sorting it into place
                // passes over the members of the mask above it.
                let above = (mask >> (k + 1)).count_ones();
                let mut t = c.mul(x);
                if above % 2 == 1 {
                    t = t.neg();
                }
                let key = mask | (1 << k);
                let e = next.entry(key).or_insert_with(|| LaurentPi::zero(field));
                *e = e.add(&t);
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// `v_1 ∧ ⋯ ∧ v_n` for `n` vectors of length `2n`.
pub fn wedge_expand(field: Field, rows: &[BasisVector]) -> WedgeElement {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == 2 * n), "expected {n} vectors of length {}", 2 * n);
    let mut w = WedgeElement::zero(n, field);
    for (mask, c) in expand_masks(field, rows) {
        w.add_term(IndexSet::from_bits(n, mask), &c);
    }
    w
}

/// Determinant of a square matrix of Laurent elements.
pub fn laurent_determinant(field: Field, rows: &[BasisVector]) -> LaurentPi {
    let k = rows.len();
    assert!(rows.iter().all(|r| r.len() == k));
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    expand_masks(field, rows).remove(&full).unwrap_or_else(|| LaurentPi::zero(field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(field: Field, len: usize, k: usize) -> BasisVector {
        (0..len).map(|i| LaurentPi::from_i64(field, (i == k) as i64)).collect()
    }

    #[test]
    fn swapping_unit_vectors_flips_sign() {
        let q = Field::Rationals;
        let a = wedge_expand(q, &[unit(q, 4, 1), unit(q, 4, 0)]);
        let s = IndexSet::new(2, [1, 2]).unwrap();
        assert_eq!(a.coefficient(&s), LaurentPi::from_i64(q, -1));
        let top = wedge_expand(q, &[unit(q, 4, 2), unit(q, 4, 3)]);
        assert_eq!(top.coefficient(&IndexSet::top(2)), LaurentPi::from_i64(q, 1));
    }

    #[test]
    fn determinant_of_small_matrix() {
        let q = Field::Rationals;
        let r = |xs: [i64; 3]| xs.iter().map(|x| LaurentPi::from_i64(q, *x)).collect::<BasisVector>();
        let d = laurent_determinant(q, &[r([2, 0, 1]), r([1, 3, 0]), r([0, 1, 4])]);
        assert_eq!(d, LaurentPi::from_i64(q, 25));
    }

    #[test]
    fn worst_terms_keep_minimal_valuation() {
        let q = Field::Rationals;
        let n = 2;
        let mut w = WedgeElement::zero(n, q);
        w.add_term(IndexSet::top(n), &LaurentPi::ratio(q, 1, 2, -1));
        w.add_term(IndexSet::bottom(n), &LaurentPi::ratio(q, 3, 1, 0));
        let wt = w.worst_terms().unwrap();
        assert_eq!(wt.len(), 1);
        assert_eq!(w.valuation(), Valuation::Finite(-1));
        assert!(!w.is_integral());
        assert!(w.shift(1).is_integral());
    }
}
