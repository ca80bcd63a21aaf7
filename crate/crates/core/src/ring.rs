//! Monomials, monomial orders and polynomial rings.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::Field;
use crate::error::PolyError;
use crate::var::Var;

/// Order used inside one block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

impl OrderKind {
    fn tag(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrevLex => "grevlex",
        }
    }
}

/// A monomial order. Variables are ranked by their position in the ring:
/// the first variable is the largest. A block order compares block by block,
/// which makes it an elimination order for the leading blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(Vec<(usize, OrderKind)>),
}

impl MonomialOrder {
    /// Two-block elimination order: the first `k` variables are eliminated.
    pub fn elimination(k: usize, rest: usize, inner: OrderKind) -> MonomialOrder {
        MonomialOrder::Block(vec![(k, inner), (rest, inner)])
    }

    fn blocks(&self, nvars: usize) -> Vec<(usize, usize, OrderKind)> {
        match self {
            MonomialOrder::Lex => vec![(0, nvars, OrderKind::Lex)],
            MonomialOrder::GrevLex => vec![(0, nvars, OrderKind::GrevLex)],
            MonomialOrder::Block(bs) => {
                let mut start = 0;
                bs.iter()
                    .map(|&(len, kind)| {
                        let b = (start, start + len, kind);
                        start += len;
                        b
                    })
                    .collect()
            }
        }
    }

    /// Block sizes and kinds covering `nvars` variables.
    pub fn block_list(&self, nvars: usize) -> Vec<(usize, OrderKind)> {
        self.blocks(nvars).into_iter().map(|(s, e, k)| (e - s, k)).collect()
    }

    /// The keyword used in ideal-file headers.
    pub fn tag(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block(bs) => {
                let inner: Vec<String> = bs.iter().map(|(l, k)| format!("{}:{}", l, k.tag())).collect();
                format!("block[{}]", inner.join(","))
            }
        }
    }

    pub fn parse_tag(s: &str) -> Option<MonomialOrder> {
        match s {
            "lex" => Some(MonomialOrder::Lex),
            "grevlex" => Some(MonomialOrder::GrevLex),
            _ => {
                let inner = s.strip_prefix("block[")?.strip_suffix(']')?;
                let mut bs = Vec::new();
                for part in inner.split(',') {
                    let (l, k) = part.split_once(':')?;
                    let kind = match k {
                        "lex" => OrderKind::Lex,
                        "grevlex" => OrderKind::GrevLex,
                        _ => return None,
                    };
                    bs.push((l.parse().ok()?, kind));
                }
                Some(MonomialOrder::Block(bs))
            }
        }
    }
}

/// A monomial over the variables of a fixed ring, stored densely.
/// Zero exponents carry no information beyond absence of the variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
    mask: u64,
}

fn bit(i: usize) -> u64 {
    1u64 << (i % 64)
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars].into_boxed_slice(), deg: 0, mask: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::from_exponents(e)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Monomial {
        let mut deg = 0u32;
        let mut mask = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                deg += e as u32;
                mask |= bit(i);
            }
        }
        Monomial { exps: exps.into_boxed_slice(), deg, mask }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(o.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps: exps.into_boxed_slice(), deg: self.deg + o.deg, mask: self.mask | o.mask }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        if self.mask & !o.mask != 0 || self.deg > o.deg {
            return false;
        }
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`; the caller guarantees divisibility.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let exps: Vec<u16> = o.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial::from_exponents(exps)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(o.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        if self.mask & o.mask == 0 {
            return true;
        }
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A polynomial ring: ordered variable list, monomial order and coefficient field.
#[derive(Debug)]
pub struct Ring {
    vars: Vec<Var>,
    index: HashMap<Var, usize>,
    order: MonomialOrder,
    blocks: Vec<(usize, usize, OrderKind)>,
    field: Field,
}

impl PartialEq for Ring {
    fn eq(&self, o: &Ring) -> bool {
        self.vars == o.vars && self.order == o.order && self.field == o.field
    }
}

impl Eq for Ring {}

impl Ring {
    /// Builds a ring. Variables must be distinct; a block order must cover
    /// all variables exactly.
    pub fn new(vars: Vec<Var>, order: MonomialOrder, field: Field) -> Result<Arc<Ring>, PolyError> {
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if index.insert(*v, i).is_some() {
                return Err(PolyError::UnknownVariable(format!("duplicate variable {v}")));
            }
        }
        if let MonomialOrder::Block(bs) = &order {
            if bs.iter().map(|b| b.0).sum::<usize>() != vars.len() {
                return Err(PolyError::UnknownVariable("block sizes do not cover the variables".into()));
            }
        }
        let blocks = order.blocks(vars.len());
        Ok(Arc::new(Ring { vars, index, order, blocks, field }))
    }

    pub fn rational(vars: Vec<Var>, order: MonomialOrder) -> Arc<Ring> {
        Ring::new(vars, order, Field::Rationals).expect("valid ring")
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn index_of(&self, v: &Var) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Ring::new(self.vars.clone(), order, self.field).expect("valid ring")
    }

    /// Compares two monomials under this ring's order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &(s, e, kind) in &self.blocks {
            let (x, y) = (&a.exps[s..e], &b.exps[s..e]);
            let ord = match kind {
                OrderKind::Lex => lex_cmp(x, y),
                OrderKind::GrevLex => grevlex_cmp(x, y),
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    /// Header line for the text ideal format.
    pub fn header(&self) -> String {
        let names: Vec<String> = self.vars.iter().map(|v| v.to_string()).collect();
        format!("order: {} {}", self.order.tag(), names.join(" > "))
    }
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.header(), self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::Family;

    fn ring(order: MonomialOrder) -> Arc<Ring> {
        let vars = (1..=3).map(|i| Var::vector(Family::Y, i)).collect();
        Ring::rational(vars, order)
    }

    #[test]
    fn lex_and_grevlex_differ_as_expected() {
        let m = |e: [u16; 3]| Monomial::from_exponents(e.to_vec());
        let lex = ring(MonomialOrder::Lex);
        let grl = ring(MonomialOrder::GrevLex);
        // y1 vs y2^2
        assert_eq!(lex.cmp(&m([1, 0, 0]), &m([0, 2, 0])), Ordering::Greater);
        assert_eq!(grl.cmp(&m([1, 0, 0]), &m([0, 2, 0])), Ordering::Less);
        // y1*y3 vs y2^2 in grevlex: the one with smaller last exponent wins
        assert_eq!(grl.cmp(&m([1, 0, 1]), &m([0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let m = |e: [u16; 3]| Monomial::from_exponents(e.to_vec());
        let r = ring(MonomialOrder::elimination(1, 2, OrderKind::GrevLex));
        assert_eq!(r.cmp(&m([1, 0, 0]), &m([0, 5, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::parse_tag(&r.order().tag()).as_ref(), Some(r.order()));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(vec![1, 2, 0]);
        let b = Monomial::from_exponents(vec![2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents(vec![1, 0, 1]));
        assert_eq!(a.lcm(&Monomial::from_exponents(vec![0, 3, 1])).exponents(), &[1, 3, 1]);
        assert!(Monomial::from_exponents(vec![1, 0, 0]).is_coprime(&Monomial::from_exponents(vec![0, 1, 1])));
    }
}
