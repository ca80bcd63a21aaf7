//! Plain-text import and export of polynomials and generator lists.
//!
//! Syntax: `+`, `-`, `*`, `^` with non-negative integer exponents, parentheses,
//! integer literals and rational literals `a/b`. An ideal file is an optional
//! header line `order: <kind> v1 > v2 > ...` followed by one generator per line.
//! Blank lines and lines starting with `#` are ignored.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeff::Field;
use crate::error::PolyError;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, Ring};
use crate::var::Var;

/// Parses one polynomial in `ring`.
pub fn parse_poly(ring: &Arc<Ring>, src: &str) -> Result<Poly, PolyError> {
    parse_line(ring, src, 1)
}

fn parse_line(ring: &Arc<Ring>, src: &str, line: usize) -> Result<Poly, PolyError> {
    let mut p = Parser { ring, s: src.as_bytes(), pos: 0, line };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses an ideal file. Without a header, `fallback` supplies the ring.
pub fn parse_ideal_text(
    src: &str,
    field: Field,
    fallback: Option<&Arc<Ring>>,
) -> Result<(Arc<Ring>, Vec<Poly>), PolyError> {
    let mut ring: Option<Arc<Ring>> = fallback.cloned();
    let mut gens = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("order:") {
            ring = Some(parse_header(rest, field, k + 1)?);
            continue;
        }
        let r = ring.as_ref().ok_or(PolyError::Parse { line: k + 1, msg: "missing order header".into() })?;
        gens.push(parse_line(r, line, k + 1)?);
    }
    let ring = ring.ok_or(PolyError::Parse { line: 0, msg: "empty input".into() })?;
    Ok((ring, gens))
}

fn parse_header(rest: &str, field: Field, line: usize) -> Result<Arc<Ring>, PolyError> {
    let rest = rest.trim();
    let (tag, vars) = rest.split_once(' ').unwrap_or((rest, ""));
    let order = MonomialOrder::parse_tag(tag).ok_or(PolyError::Parse { line, msg: format!("unknown order `{tag}`") })?;
    let mut vs = Vec::new();
    for name in vars.split('>') {
        let name = name.trim();
        if !name.is_empty() {
            vs.push(name.parse::<Var>()?);
        }
    }
    Ring::new(vs, order, field)
}

/// Renders an ideal in the text format, header first.
pub fn format_ideal_text(ring: &Ring, gens: &[Poly]) -> String {
    let mut out = ring.header();
    out.push('\n');
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { line: self.line, msg: format!("{msg} at column {}", self.pos + 1) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: u32 = e.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let mut q = BigRational::from_integer(num);
                if self.s.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den: BigInt = self.digits().ok_or_else(|| self.err("expected denominator"))?.parse().unwrap();
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    q /= BigRational::from_integer(den);
                }
                Ok(Poly::constant(self.ring, self.ring.field().from_rational(&q)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
                let v: Var = name.parse()?;
                Poly::try_var(self.ring, v)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        let vars = vec![Var::b(1, 1), Var::b(1, 2), Var::b(2, 1), Var::b(2, 2), Var::pi()];
        Ring::rational(vars, MonomialOrder::GrevLex)
    }

    #[test]
    fn round_trip() {
        let r = ring();
        for src in ["b_1_1*b_2_2 - b_1_2*b_2_1", "-1/2*b_1_1^2 + 3*pi - 7", "0", "pi^3"] {
            let p = parse_poly(&r, src).unwrap();
            let again = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, again);
        }
        let p = parse_poly(&r, "(b_1_1 + pi)*(b_1_1 - pi)").unwrap();
        assert_eq!(p.to_string(), "b_1_1^2 - pi^2");
    }

    #[test]
    fn ideal_file_round_trip() {
        let r = ring();
        let gens = vec![parse_poly(&r, "b_1_1*b_2_2 - b_1_2*b_2_1").unwrap(), parse_poly(&r, "pi - 1/3").unwrap()];
        let txt = format_ideal_text(&r, &gens);
        assert!(txt.starts_with("order: grevlex b_1_1 > b_1_2 > b_2_1 > b_2_2 > pi\n"));
        let (r2, g2) = parse_ideal_text(&txt, Field::Rationals, None).unwrap();
        assert_eq!(*r2, *r);
        assert_eq!(g2, gens);
    }

    #[test]
    fn rejects_unknown_variables() {
        let r = ring();
        assert!(matches!(parse_poly(&r, "b_3_3"), Err(PolyError::UnknownVariable(_))));
        assert!(parse_poly(&r, "b_1_1 +").is_err());
    }
}
