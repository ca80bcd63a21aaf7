//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::error::PolyError;
use crate::ring::{Monomial, Ring};
use crate::var::Var;

/// A polynomial: terms sorted strictly descending under the ring's order,
/// with no zero coefficients. Equality is structural.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Poly {
    fn eq(&self, o: &Poly) -> bool {
        same_ring(&self.ring, &o.ring) && self.terms == o.terms
    }
}

impl Eq for Poly {}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Poly {
        Poly::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Poly {
        Poly::constant(ring, ring.field().from_i64(c))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Poly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { ring: ring.clone(), terms }
    }

    /// The variable `v`. Panics if `v` is not a variable of the ring.
    pub fn var(ring: &Arc<Ring>, v: Var) -> Poly {
        Poly::try_var(ring, v).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_var(ring: &Arc<Ring>, v: Var) -> Result<Poly, PolyError> {
        let i = ring.index_of(&v).ok_or_else(|| PolyError::UnknownVariable(v.to_string()))?;
        Ok(Poly::var_at(ring, i))
    }

    pub fn var_at(ring: &Arc<Ring>, i: usize) -> Poly {
        Poly::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    /// Normalizes arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, Coeff)>) -> Poly {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        Poly { ring: ring.clone(), terms: out }
    }

    /// Builds from terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Poly {
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_term(&self) -> Option<Poly> {
        self.terms.first().map(|(m, c)| Poly::monomial(&self.ring, m.clone(), c.clone()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Indices of variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    fn check(&self, o: &Poly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &o.ring) {
            Ok(())
        } else if self.ring.field() != o.ring.field() {
            Err(PolyError::FieldMismatch)
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly, PolyError> {
        self.check(o)?;
        Ok(self.combine(o, false))
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly, PolyError> {
        self.check(o)?;
        Ok(self.combine(o, true))
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly, PolyError> {
        self.check(o)?;
        Ok(self.product(o))
    }

    fn combine(&self, o: &Poly, negate: bool) -> Poly {
        let ring = &self.ring;
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { ring: ring.clone(), terms: out }
    }

    fn product(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (small, large) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let mut all = Vec::with_capacity(self.len() * o.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                all.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Poly::from_terms(&self.ring, all)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, d)| (t.mul(m), d.mul(c))).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::from_i64(&self.ring, 1);
        for _ in 0..e {
            r = r.product(self);
        }
        r
    }

    /// Formal partial derivative with respect to the variable at index `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            let c = c.mul(&field.from_i64(e as i64));
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(exps), c));
            }
        }
        // Differentiation may reorder terms in non-graded orders; renormalize.
        Poly::from_terms(&self.ring, terms)
    }

    pub fn derivative_var(&self, v: &Var) -> Result<Poly, PolyError> {
        let i = self.ring.index_of(v).ok_or_else(|| PolyError::UnknownVariable(v.to_string()))?;
        Ok(self.derivative(i))
    }

    /// Evaluates at a point given in ring-variable order.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                t = t.mul(&point[i].pow(m.exponent(i) as u32));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Ring homomorphism: variable `i` is sent to `images[i]` (all in the target ring).
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        let mut power_cache: Vec<Vec<Poly>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, target.field().convert(c));
            for i in m.support() {
                let e = m.exponent(i) as usize;
                let cache = &mut power_cache[i];
                while cache.len() < e {
                    let next = match cache.last() {
                        None => images[i].clone(),
                        Some(p) => p.product(&images[i]),
                    };
                    cache.push(next);
                }
                t = t.product(&cache[e - 1]);
            }
            acc.extend(t.terms);
        }
        Poly::from_terms(target, acc)
    }

    /// Re-expresses the polynomial in another ring containing all of its
    /// variables (possibly under a different order).
    pub fn map_into(&self, target: &Arc<Ring>) -> Result<Poly, PolyError> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for v in self.ring.vars() {
            map.push(target.index_of(v));
        }
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; n];
            for i in m.support() {
                let j = map[i].ok_or_else(|| PolyError::UnknownVariable(self.ring.vars()[i].to_string()))?;
                exps[j] = m.exponent(i);
            }
            terms.push((Monomial::from_exponents(exps), c.clone()));
        }
        Ok(Poly::from_terms(target, terms))
    }

    /// True if no variable outside `allowed` (by index) occurs.
    pub fn only_uses(&self, allowed: &[bool]) -> bool {
        self.terms.iter().all(|(m, _)| m.support().all(|i| allowed[i]))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.try_sub(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Poly { ring: self.ring.clone(), terms }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn fmt_monomial(ring: &Ring, m: &Monomial, f: &mut impl fmt::Write) -> fmt::Result {
    let mut first = true;
    for i in m.support() {
        if !first {
            f.write_char('*')?;
        }
        first = false;
        write!(f, "{}", ring.vars()[i])?;
        let e = m.exponent(i);
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_monomial(&self.ring, m, f)?;
            }
        }
        Ok(())
    }
}
