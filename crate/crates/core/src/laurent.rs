//! Laurent polynomials in the uniformizer `pi` with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coeff, Field};

/// Valuation of a Laurent element; zero has valuation `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i32),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// A finite sum `sum c_k pi^k`, `k` any integer. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPi {
    field: Field,
    coeffs: BTreeMap<i32, Coeff>,
}

impl LaurentPi {
    pub fn zero(field: Field) -> LaurentPi {
        LaurentPi { field, coeffs: BTreeMap::new() }
    }

    /// `c * pi^k`.
    pub fn term(c: Coeff, k: i32) -> LaurentPi {
        let field = c.field();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPi { field, coeffs }
    }

    pub fn from_i64(field: Field, c: i64) -> LaurentPi {
        LaurentPi::term(field.from_i64(c), 0)
    }

    /// `(num/den) * pi^k`.
    pub fn ratio(field: Field, num: i64, den: i64, k: i32) -> LaurentPi {
        LaurentPi::term(field.from_ratio(num, den), k)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.keys().next() {
            Some(&k) => Valuation::Finite(k),
            None => Valuation::Infinity,
        }
    }

    /// Coefficient of the lowest power.
    pub fn leading(&self) -> Option<(i32, &Coeff)> {
        self.coeffs.iter().next().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i32) -> Coeff {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Coeff)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    fn add_term(&mut self, k: i32, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let v = match self.coeffs.get(&k) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, v);
        }
    }

    pub fn add(&self, o: &LaurentPi) -> LaurentPi {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            r.add_term(*k, c);
        }
        r
    }

    pub fn sub(&self, o: &LaurentPi) -> LaurentPi {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> LaurentPi {
        LaurentPi { field: self.field, coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn mul(&self, o: &LaurentPi) -> LaurentPi {
        let mut r = LaurentPi::zero(self.field);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &o.coeffs {
                r.add_term(a + b, &ca.mul(cb));
            }
        }
        r
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPi {
        if c.is_zero() {
            return LaurentPi::zero(self.field);
        }
        LaurentPi { field: self.field, coeffs: self.coeffs.iter().map(|(k, x)| (*k, x.mul(c))).collect() }
    }

    /// Multiplies by `pi^k`.
    pub fn shift(&self, k: i32) -> LaurentPi {
        LaurentPi { field: self.field, coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Drops every term of exponent greater than `k`.
    pub fn truncate_above(&self, k: i32) -> LaurentPi {
        LaurentPi { field: self.field, coeffs: self.coeffs.range(..=k).map(|(e, c)| (*e, c.clone())).collect() }
    }
}

impl fmt::Display for LaurentPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.coeffs.iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match *k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if *k == 1 {
                        f.write_str("pi")?
                    } else {
                        write!(f, "pi^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn valuation_examples() {
        let x = LaurentPi::ratio(Q, 1, 1, -3).add(&LaurentPi::ratio(Q, 2, 1, 1));
        assert_eq!(x.valuation(), Valuation::Finite(-3));
        let half = LaurentPi::ratio(Q, 1, 2, -1);
        let two = LaurentPi::ratio(Q, 2, 1, 1);
        assert_eq!(half.mul(&two), LaurentPi::from_i64(Q, 1));
        let y = LaurentPi::ratio(Q, 1, 1, -1);
        assert_eq!(y.sub(&y).valuation(), Valuation::Infinity);
        assert!(Valuation::Finite(1000) < Valuation::Infinity);
    }

    #[test]
    fn display() {
        let x = LaurentPi::ratio(Q, -1, 2, -2).add(&LaurentPi::ratio(Q, 3, 1, 0)).add(&LaurentPi::ratio(Q, 1, 1, 1));
        assert_eq!(x.to_string(), "-1/2*pi^-2 + 3 + pi");
    }
}
