//! Monomial ideals: minimal generators, square-freeness and Krull dimension.

use std::sync::Arc;

use crate::error::GbError;
use crate::ring::{Monomial, Ring};

/// A monomial ideal stored by its minimal generators (an antichain under
/// divisibility), sorted increasingly under the ring order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<Ring>, mons: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut all: Vec<Monomial> = mons.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then(ring.cmp(a, b)));
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_by(|a, b| ring.cmp(a, b));
        MonomialIdeal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// True if every minimal generator has degree exactly 2 and is square-free.
    pub fn is_squarefree_quadratic(&self) -> bool {
        self.gens.iter().all(|g| g.degree() == 2 && g.is_squarefree())
    }

    /// Krull dimension of `k[x]/M`: the largest set of variables containing
    /// the support of no generator, i.e. `nvars` minus a minimum hitting set
    /// of the supports.
    pub fn dimension(&self) -> Result<usize, GbError> {
        if !self.is_proper() {
            return Err(GbError::Improper);
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support().collect()).collect();
        Ok(n - min_hitting_set(n, &supports))
    }
}

/// Size of the smallest variable set meeting every support. Branch and bound:
/// pick an unhit support of minimal size and branch on its variables, forbidding
/// variables already tried in sibling branches.
fn min_hitting_set(n: usize, supports: &[Vec<usize>]) -> usize {
    fn go(
        supports: &[Vec<usize>],
        chosen: &mut Vec<bool>,
        banned: &mut Vec<bool>,
        size: usize,
        best: &mut usize,
    ) {
        if size >= *best {
            return;
        }
        let mut pick: Option<&Vec<usize>> = None;
        let mut unhit = 0usize;
        for s in supports {
            if s.iter().any(|&v| chosen[v]) {
                continue;
            }
            unhit += 1;
            let live = s.iter().filter(|&&v| !banned[v]).count();
            if live == 0 {
                return;
            }
            if pick.is_none_or(|p| live < p.iter().filter(|&&v| !banned[v]).count()) {
                pick = Some(s);
            }
        }
        let Some(s) = pick else {
            *best = size;
            return;
        };
        if unhit > 0 && size + 1 >= *best {
            return;
        }
        let cands: Vec<usize> = s.iter().copied().filter(|&v| !banned[v]).collect();
        let mut newly_banned = Vec::new();
        for v in cands {
            chosen[v] = true;
            go(supports, chosen, banned, size + 1, best);
            chosen[v] = false;
            banned[v] = true;
            newly_banned.push(v);
        }
        for v in newly_banned {
            banned[v] = false;
        }
    }
    let mut best = n + 1;
    go(supports, &mut vec![false; n], &mut vec![false; n], 0, &mut best);
    best.min(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;
    use crate::var::{Family, Var};

    fn ring(n: usize) -> Arc<Ring> {
        Ring::rational((1..=n).map(|i| Var::vector(Family::Y, i as u16)).collect(), MonomialOrder::GrevLex)
    }

    fn mon(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn dimension_examples() {
        let r = ring(3);
        assert_eq!(MonomialIdeal::new(&r, []).dimension().unwrap(), 3);
        let r2 = ring(2);
        assert_eq!(MonomialIdeal::new(&r2, [mon(&[1, 1])]).dimension().unwrap(), 1);
        assert_eq!(MonomialIdeal::new(&r2, [mon(&[0, 0])]).dimension(), Err(GbError::Improper));
        // cycle y1y2, y2y3, y3y1: minimum vertex cover 2
        let m = MonomialIdeal::new(&r, [mon(&[1, 1, 0]), mon(&[0, 1, 1]), mon(&[1, 0, 1])]);
        assert_eq!(m.dimension().unwrap(), 1);
    }

    #[test]
    fn minimal_generators() {
        let r = ring(3);
        let m = MonomialIdeal::new(&r, [mon(&[2, 1, 0]), mon(&[1, 0, 0]), mon(&[0, 1, 1])]);
        assert_eq!(m.generators().len(), 2);
        assert!(m.is_squarefree());
        assert!(!MonomialIdeal::new(&r, [mon(&[2, 0, 0])]).is_squarefree());
    }
}
