//! Multivariate division and S-polynomials.

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::poly::Poly;
use crate::ring::{Monomial, Ring};

type Term = (Monomial, Coeff);

/// `a - c*m*b`, where both inputs are sorted descending. The result is sorted.
fn sub_scaled(ring: &Ring, a: &[Term], c: &Coeff, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bs = b.iter().map(|(bm, bc)| (bm.mul(m), bc.mul(c))).peekable();
    while i < a.len() {
        let Some((bm, _)) = bs.peek() else { break };
        match ring.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (bm, bc) = bs.next().unwrap();
                out.push((bm, bc.neg()));
            }
            Ordering::Equal => {
                let (bm, bc) = bs.next().unwrap();
                let v = a[i].1.sub(&bc);
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(bs.map(|(bm, bc)| (bm, bc.neg())));
    out
}

/// Index of the first element of `g` whose leading monomial divides `m`.
pub(crate) fn find_divisor(g: &[Poly], m: &Monomial) -> Option<usize> {
    g.iter().position(|p| p.leading_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Full remainder of `f` on division by `g`: no term of the result is
/// divisible by a leading monomial of `g`. Among eligible divisors the first
/// one in list order is used, so the remainder is reproducible.
pub fn reduce(f: &Poly, g: &[Poly]) -> Poly {
    let ring = f.ring().clone();
    let mut rem: Vec<Term> = Vec::new();
    let mut p: Vec<Term> = f.terms().to_vec();
    // Terms of `p` before `start` were moved to the remainder already.
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = (&p[start].0, &p[start].1);
        match find_divisor(g, lm) {
            Some(k) => {
                let gk = &g[k];
                let (glm, glc) = &gk.terms()[0];
                let q = glm.quotient_of(lm);
                let c = lc.div(glc);
                p = sub_scaled(&ring, &p[start + 1..], &c, &q, &gk.terms()[1..]);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Poly::from_sorted(&ring, rem)
}

/// `S(f, g) = (L/in f) f / lc(f) - (L/in g) g / lc(g)` with `L = lcm(in f, in g)`.
/// Zero if either input is zero.
pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (Some((fm, fc)), Some((gm, gc))) = (f.terms().first(), g.terms().first()) else {
        return Poly::zero(f.ring());
    };
    let l = fm.lcm(gm);
    let ring = f.ring();
    let a: Vec<Term> = f.terms()[1..].iter().map(|(m, c)| (m.mul(&fm.quotient_of(&l)), c.div(fc))).collect();
    let out = sub_scaled(ring, &a, &gc.inv(), &gm.quotient_of(&l), &g.terms()[1..]);
    Poly::from_sorted(ring, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;
    use crate::text::parse_poly;
    use crate::var::{Family, Var};
    use std::sync::Arc;

    fn xy() -> Arc<Ring> {
        Ring::rational(vec![Var::scalar(Family::X), Var::scalar(Family::Y)], MonomialOrder::Lex)
    }

    #[test]
    fn small_divisions() {
        let r = xy();
        let p = |s: &str| parse_poly(&r, s).unwrap();
        assert!(reduce(&p("x^2"), &[p("x")]).is_zero());
        assert_eq!(reduce(&p("x*y - 1"), &[p("y")]), p("-1"));
        assert_eq!(reduce(&p("x^2*y + x*y^2 + y^2"), &[p("x*y - 1"), p("y^2 - 1")]), p("x + y + 1"));
    }

    #[test]
    fn diagonal_minor_division() {
        // Lex with b_2_2 > b_2_1 > b_1_2 > b_1_1 makes b_1_1*b_2_2 the leading term.
        let vars = vec![Var::b(2, 2), Var::b(2, 1), Var::b(1, 2), Var::b(1, 1)];
        let r = Ring::rational(vars, MonomialOrder::Lex);
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let minor = p("b_1_1*b_2_2 - b_1_2*b_2_1");
        assert_eq!(reduce(&p("b_1_1*b_2_2"), &[minor.clone()]), p("b_1_2*b_2_1"));
        assert!(s_polynomial(&minor, &minor).is_zero());
    }
}
