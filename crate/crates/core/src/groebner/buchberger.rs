//! Buchberger's algorithm with the Gebauer-Moeller pair criteria.
//!
//! Pairs are taken in batches of minimal lcm degree (the normal strategy).
//! Within a batch the S-polynomials are reduced in parallel against a frozen
//! snapshot of the basis; the results are then inserted one at a time in
//! batch order, each re-reduced against everything inserted before it. The
//! output therefore does not depend on the number of worker threads.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{BudgetKind, GbError};
use crate::poly::Poly;
use crate::ring::Monomial;

use super::reduce::{reduce, s_polynomial};

/// Resource caps for one Groebner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum total degree of any basis element.
    pub max_degree: u32,
    /// Maximum number of terms in any basis element.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_pairs: 200_000, max_degree: 24, max_terms: 20_000 }
    }
}

pub const ENV_PAIRS: &str = "ULM_BUDGET_PAIRS";
pub const ENV_DEGREE: &str = "ULM_BUDGET_DEGREE";
pub const ENV_TERMS: &str = "ULM_BUDGET_TERMS";

impl Budget {
    /// Defaults, overridden by `ULM_BUDGET_PAIRS`, `ULM_BUDGET_DEGREE` and
    /// `ULM_BUDGET_TERMS` when those are set to valid integers.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Some(v) = env_num(ENV_PAIRS) {
            b.max_pairs = v;
        }
        if let Some(v) = env_num(ENV_DEGREE) {
            b.max_degree = v as u32;
        }
        if let Some(v) = env_num(ENV_TERMS) {
            b.max_terms = v;
        }
        b
    }

    fn check(&self, p: &Poly) -> Result<(), GbError> {
        if p.degree().unwrap_or(0) > self.max_degree {
            return Err(GbError::Budget { kind: BudgetKind::Degree, limit: self.max_degree as usize });
        }
        if p.len() > self.max_terms {
            return Err(GbError::Budget { kind: BudgetKind::Terms, limit: self.max_terms });
        }
        Ok(())
    }
}

fn env_num(key: &str) -> Option<usize> {
    std::env::var(key).ok()?.trim().parse().ok()
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Counters from one run, useful for diagnostics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub basis_peak: usize,
}

struct State {
    basis: Vec<Poly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    /// Gebauer-Moeller update after appending `basis[h]`.
    fn update(&mut self, h: usize) {
        let mh = self.basis[h].leading_monomial().unwrap().clone();
        let mut cand: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let mg = self.basis[g].leading_monomial().unwrap();
                (g, mg.lcm(&mh), mg.is_coprime(&mh))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while !cand.is_empty() {
            let (g, l, coprime) = cand.remove(0);
            let dominated = cand.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l, coprime));
            }
        }
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if !mh.divides(&p.lcm) {
                return true;
            }
            let mi = basis[p.i].leading_monomial().unwrap();
            let mj = basis[p.j].leading_monomial().unwrap();
            mi.lcm(&mh) == p.lcm || mj.lcm(&mh) == p.lcm
        });
        for (g, l, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i: g, j: h, lcm: l });
            }
        }
        for g in 0..h {
            if self.active[g] && mh.divides(self.basis[g].leading_monomial().unwrap()) {
                self.active[g] = false;
            }
        }
    }

    fn insert(&mut self, p: Poly) {
        self.basis.push(p.monic());
        self.active.push(true);
        self.update(self.basis.len() - 1);
    }
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`,
/// sorted by increasing leading monomial. All inputs must share one ring.
pub fn groebner_basis(gens: &[Poly], budget: &Budget) -> Result<Vec<Poly>, GbError> {
    groebner_basis_with_stats(gens, budget).map(|(g, _)| g)
}

pub fn groebner_basis_with_stats(gens: &[Poly], budget: &Budget) -> Result<(Vec<Poly>, GbStats), GbError> {
    let mut stats = GbStats::default();
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok((Vec::new(), stats));
    };
    let ring = first.ring().clone();

    // Seed with the generators, sorted by leading monomial so that the
    // result does not depend on input order beyond what reduction dictates.
    let mut input: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    input.sort_by(|a, b| cmp_lead(&ring, a, b));
    input.dedup();
    let mut st = State { basis: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in input {
        let r = reduce(&g, &st.basis);
        if r.is_zero() {
            continue;
        }
        budget.check(&r)?;
        if r.is_constant() {
            return Ok((vec![Poly::from_i64(&ring, 1)], stats));
        }
        st.insert(r);
    }

    while !st.pairs.is_empty() {
        let dmin = st.pairs.iter().map(|p| p.lcm.degree()).min().unwrap();
        let mut batch: Vec<Pair> = Vec::new();
        st.pairs.retain(|p| {
            if p.lcm.degree() == dmin {
                batch.push(p.clone());
                false
            } else {
                true
            }
        });
        batch.sort_by(|a, b| ring.cmp(&a.lcm, &b.lcm).then(a.j.cmp(&b.j)).then(a.i.cmp(&b.i)));
        stats.pairs_reduced += batch.len();
        if stats.pairs_reduced > budget.max_pairs {
            return Err(GbError::Budget { kind: BudgetKind::Pairs, limit: budget.max_pairs });
        }
        let snapshot = &st.basis;
        let reduced: Vec<Poly> = batch
            .par_iter()
            .map(|p| reduce(&s_polynomial(&snapshot[p.i], &snapshot[p.j]), snapshot))
            .collect();
        let base_len = st.basis.len();
        for r in reduced {
            let r = if st.basis.len() > base_len { reduce(&r, &st.basis) } else { r };
            if r.is_zero() {
                stats.zero_reductions += 1;
                continue;
            }
            budget.check(&r)?;
            if r.is_constant() {
                return Ok((vec![Poly::from_i64(&ring, 1)], stats));
            }
            st.insert(r);
        }
        stats.basis_peak = stats.basis_peak.max(st.basis.len());
    }

    Ok((reduce_basis(&st.basis, &st.active), stats))
}

fn cmp_lead(ring: &crate::ring::Ring, a: &Poly, b: &Poly) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => ring.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

/// Minimalizes and inter-reduces a Groebner basis.
fn reduce_basis(basis: &[Poly], active: &[bool]) -> Vec<Poly> {
    let mut min: Vec<Poly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        if !active[k] {
            continue;
        }
        let lm = p.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(o, q)| {
            o != k && active[o] && q.leading_monomial().unwrap().divides(lm) && (q.leading_monomial().unwrap() != lm || o < k)
        });
        if !redundant {
            min.push(p.clone());
        }
    }
    let ring = match min.first() {
        Some(p) => p.ring().clone(),
        None => return min,
    };
    min.sort_by(|a, b| cmp_lead(&ring, a, b));
    let out: Vec<Poly> = min
        .par_iter()
        .enumerate()
        .map(|(k, p)| {
            let others: Vec<Poly> = min.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, q)| q.clone()).collect();
            let lead = p.leading_term().unwrap();
            let tail = p - &lead;
            (&lead + &reduce(&tail, &others)).monic()
        })
        .collect();
    out
}

/// True if every S-polynomial of `g` reduces to zero modulo `g`.
pub fn satisfies_buchberger_criterion(g: &[Poly]) -> bool {
    first_failing_pair(g).is_none()
}

/// The first pair `(i, j)` whose S-polynomial has a nonzero remainder.
pub fn first_failing_pair(g: &[Poly]) -> Option<(usize, usize, Poly)> {
    let pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let r = reduce(&s_polynomial(&g[i], &g[j]), g);
            (!r.is_zero()).then_some((i, j, r))
        })
        .min_by_key(|(i, j, _)| (*j, *i))
}

/// True if `g` is a reduced Groebner basis: criterion holds, elements are
/// monic and no term of any element is divisible by another leading monomial.
pub fn is_reduced_basis(g: &[Poly]) -> bool {
    for (k, p) in g.iter().enumerate() {
        if !p.leading_coeff().is_some_and(|c| c.is_one()) {
            return false;
        }
        for (o, q) in g.iter().enumerate() {
            if o == k {
                continue;
            }
            let lm = q.leading_monomial().unwrap();
            if p.terms().iter().any(|(m, _)| lm.divides(m)) {
                return false;
            }
        }
    }
    satisfies_buchberger_criterion(g)
}
