//! Exact scalars: arbitrary-precision rationals and residues modulo an odd prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::PolyError;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting `p = 2`, composites and values too large for
    /// single-word multiplication.
    pub fn prime(p: u64) -> Result<Field, PolyError> {
        if p == 2 {
            return Err(PolyError::CharacteristicTwo);
        }
        if p < 3 || p >= (1 << 31) || !is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Coeff::Fp { v: v.rem_euclid(p as i64) as u64, p },
        }
    }

    /// The image of the rational `num/den` in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Coeff {
        assert!(den != 0, "zero denominator");
        match *self {
            Field::Rationals => Coeff::Q(BigRational::new(BigInt::from(num), BigInt::from(den))),
            Field::Prime(_) => self.from_i64(num).div(&self.from_i64(den)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Coeff {
        match *self {
            Field::Rationals => Coeff::Q(q.clone()),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let n = q.numer().mod_floor(&pm).to_u64().unwrap();
                let d = q.denom().mod_floor(&pm).to_u64().unwrap();
                assert!(d != 0, "denominator divisible by the characteristic");
                Coeff::Fp { v: mul_mod(n, inv_mod(d, p), p), p }
            }
        }
    }
}

impl Field {
    /// Maps a coefficient into this field: rationals reduce modulo p,
    /// residues must already belong to the field.
    pub fn convert(&self, c: &Coeff) -> Coeff {
        match c {
            Coeff::Q(q) => self.from_rational(q),
            Coeff::Fp { .. } => {
                assert_eq!(c.field(), *self, "mixed-field conversion");
                c.clone()
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field element. Rationals are always stored reduced with a positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in GF({p})");
    pow_mod(a, p - 2, p)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Q(_) => Field::Rationals,
            Coeff::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    fn check(&self, other: &Coeff) {
        debug_assert_eq!(self.field(), other.field(), "mixed-field coefficient arithmetic");
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        self.check(o);
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, .. }) => Coeff::Fp { v: (a + b) % p, p: *p },
            _ => panic!("mixed-field coefficient arithmetic"),
        }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        self.check(o);
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a - b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, .. }) => Coeff::Fp { v: (a + p - b) % p, p: *p },
            _ => panic!("mixed-field coefficient arithmetic"),
        }
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        self.check(o);
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, .. }) => Coeff::Fp { v: mul_mod(*a, *b, *p), p: *p },
            _ => panic!("mixed-field coefficient arithmetic"),
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Coeff) -> Coeff {
        self.mul(&o.inv())
    }

    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Q(a) => {
                assert!(!a.is_zero(), "division by zero");
                Coeff::Q(a.recip())
            }
            Coeff::Fp { v, p } => Coeff::Fp { v: inv_mod(*v, *p), p: *p },
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp { v, p } => Coeff::Fp { v: (p - v) % p, p: *p },
        }
    }

    pub fn pow(&self, e: u32) -> Coeff {
        let mut r = self.field().one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// True for rationals with a negative value. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(a) => a.is_negative(),
            Coeff::Fp { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Q(a) => Some(a),
            Coeff::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert_eq!(Field::prime(2), Err(PolyError::CharacteristicTwo));
        assert!(matches!(Field::prime(9), Err(PolyError::NotPrime(9))));
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn rationals_are_canonical() {
        let q = Field::Rationals;
        let a = q.from_ratio(2, -4);
        assert_eq!(a.to_string(), "-1/2");
        assert_eq!(a.mul(&q.from_i64(-2)), q.one());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(11).unwrap();
        for v in 1..11 {
            let c = f.from_i64(v);
            assert!(c.mul(&c.inv()).is_one());
        }
        assert_eq!(f.from_ratio(1, 2), f.from_i64(6));
        assert_eq!(f.from_i64(-1), f.from_i64(10));
    }
}
