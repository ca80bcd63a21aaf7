//! Ideals with a lazily computed canonical reduced Groebner basis.

use std::sync::{Arc, OnceLock};

use crate::error::GbError;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, OrderKind, Ring};
use crate::var::{Family, Var};

use super::buchberger::{groebner_basis, Budget};
use super::monomial_ideal::MonomialIdeal;
use super::reduce::reduce;

/// An ideal of a polynomial ring under the ring's monomial order.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Poly>,
    basis: OnceLock<Vec<Poly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), basis }
    }
}

impl Ideal {
    /// Zero generators are dropped. Panics if a generator lives in another ring.
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Poly>) -> Ideal {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(**g.ring() == **ring, "generator from a different ring");
        }
        Ideal { ring: ring.clone(), gens, basis: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// The cached basis, if it has been computed.
    pub fn cached_basis(&self) -> Option<&[Poly]> {
        self.basis.get().map(|b| b.as_slice())
    }

    /// The reduced Groebner basis, computing it under `budget` on first use.
    pub fn basis_with(&self, budget: &Budget) -> Result<&[Poly], GbError> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = groebner_basis(&self.gens, budget)?;
        let _ = self.basis.set(b);
        Ok(self.basis.get().unwrap())
    }

    /// The reduced Groebner basis under the environment-configured budget.
    pub fn basis(&self) -> Result<&[Poly], GbError> {
        self.basis_with(&Budget::from_env())
    }

    pub fn is_unit(&self) -> Result<bool, GbError> {
        Ok(self.basis()?.iter().any(|g| g.is_constant()))
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly, GbError> {
        Ok(reduce(f, self.basis()?))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool, GbError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The first polynomial of `fs` outside the ideal, if any.
    pub fn first_non_member<'a>(&self, fs: impl IntoIterator<Item = &'a Poly>) -> Result<Option<&'a Poly>, GbError> {
        let g = self.basis()?;
        Ok(fs.into_iter().find(|f| !reduce(f, g).is_zero()))
    }

    pub fn contains_all<'a>(&self, fs: impl IntoIterator<Item = &'a Poly>) -> Result<bool, GbError> {
        Ok(self.first_non_member(fs)?.is_none())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool, GbError> {
        other.contains_all(self.gens.iter())
    }

    /// Equality of ideals: identical reduced bases. Both sides must use the same ring.
    pub fn equals(&self, other: &Ideal) -> Result<bool, GbError> {
        if *self.ring != *other.ring {
            return Err(GbError::Poly(crate::error::PolyError::RingMismatch));
        }
        Ok(self.basis()? == other.basis()?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().chain(other.gens.iter()).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a * b));
        Ideal::new(&self.ring, gens)
    }

    /// The same ideal in a ring with the same variables under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        let gens = self.gens.iter().map(|g| g.map_into(&ring).expect("same variables"));
        Ideal::new(&ring, gens)
    }

    /// Leading monomials of the reduced basis.
    pub fn initial_ideal(&self) -> Result<MonomialIdeal, GbError> {
        let b = self.basis()?;
        Ok(MonomialIdeal::new(&self.ring, b.iter().map(|g| g.leading_monomial().unwrap().clone())))
    }

    /// Krull dimension of the quotient ring.
    pub fn dimension(&self) -> Result<usize, GbError> {
        self.initial_ideal()?.dimension()
    }

    /// `self ∩ other` via elimination of an auxiliary variable `t` from
    /// `t·I + (1−t)·J` under the block order `t` > (declared order).
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, GbError> {
        let aux = Var::scalar(Family::AUX);
        if self.ring.index_of(&aux).is_some() {
            return Err(GbError::Poly(crate::error::PolyError::UnknownVariable(
                "auxiliary variable `t` already in use".into(),
            )));
        }
        let mut vars = vec![aux];
        vars.extend_from_slice(self.ring.vars());
        let mut blocks = vec![(1, OrderKind::Lex)];
        blocks.extend(self.ring.order().block_list(self.ring.nvars()));
        let big = Ring::new(vars, MonomialOrder::Block(blocks), self.ring.field())?;
        let t = Poly::var(&big, aux);
        let one_minus_t = &Poly::from_i64(&big, 1) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &g.map_into(&big)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.map_into(&big)?);
        }
        let basis = groebner_basis(&gens, &Budget::from_env())?;
        let mut kept = Vec::new();
        for g in basis {
            if g.terms().iter().all(|(m, _)| m.exponent(0) == 0) {
                kept.push(g.map_into(&self.ring)?);
            }
        }
        Ok(Ideal::new(&self.ring, kept))
    }

    /// Elements of the reduced basis (under a block order eliminating the
    /// first `k` variables) that do not involve those variables, mapped into
    /// `target`, whose variables must include all remaining ones.
    pub fn eliminate_leading(&self, k: usize, target: &Arc<Ring>) -> Result<Ideal, GbError> {
        let b = self.basis()?;
        let mut kept = Vec::new();
        for g in b {
            if g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exponent(i) == 0)) {
                kept.push(g.map_into(target)?);
            }
        }
        Ok(Ideal::new(target, kept))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn ring(order: MonomialOrder) -> Arc<Ring> {
        Ring::rational(vec![Var::scalar(Family::X), Var::scalar(Family::Y), Var::scalar(Family::Z)], order)
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(r, s).unwrap()))
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(MonomialOrder::Lex);
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        let target = parse_poly(&r, "y^3 - z^2").unwrap();
        assert!(i.basis().unwrap().contains(&target));
        assert!(i.contains(&target).unwrap());
        assert!(!i.contains(&parse_poly(&r, "x").unwrap()).unwrap());
    }

    #[test]
    fn equality_membership_intersection() {
        let r = ring(MonomialOrder::GrevLex);
        assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x + y"])).unwrap());
        assert!(!ideal(&r, &["x"]).equals(&ideal(&r, &["x^2"])).unwrap());
        assert!(!ideal(&r, &["x^2"]).contains(&parse_poly(&r, "x").unwrap()).unwrap());
        assert!(ideal(&r, &["x^2"]).contains(&Poly::zero(&r)).unwrap());
        let cap = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(cap.equals(&ideal(&r, &["x*y"])).unwrap());
        let cap = ideal(&r, &["x"]).intersect(&ideal(&r, &["x", "y"])).unwrap();
        assert!(cap.equals(&ideal(&r, &["x"])).unwrap());
    }

    #[test]
    fn initial_ideal_and_dimension() {
        let r = ring(MonomialOrder::Lex);
        let i = ideal(&r, &["x^2 - y"]);
        let init = i.initial_ideal().unwrap();
        assert_eq!(init.generators().len(), 1);
        assert_eq!(init.generators()[0].exponents(), &[2, 0, 0]);
        assert_eq!(i.dimension().unwrap(), 2);
        assert!(ideal(&r, &["x", "x - 1"]).is_unit().unwrap());
    }
}
