//! Ideals in the variables `𝐀 = X_4H` (`a_i_j`, `s × s`) and `𝐁 = X_3`
//! (`b_i_j`, `s × 2κ`), where `s = n − 2κ`.

use std::sync::Arc;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, Ring};
use crate::var::{Family, Var};

use super::special::{bottom_variables, wedge2};
use super::NamedIdeal;

/// Variables `a_i_j` then `b_i_j`, row-major.
pub fn ab_variables(s: usize, t: usize) -> Vec<Var> {
    let mut v = Vec::with_capacity(s * s + s * t);
    for i in 1..=s {
        for j in 1..=s {
            v.push(Var::a(i, j));
        }
    }
    for i in 1..=s {
        for j in 1..=t {
            v.push(Var::b(i, j));
        }
    }
    v
}

/// `k[𝐀, 𝐁]` for a chart, under `order`.
pub fn ab_ring(chart: &ChartSpec, order: MonomialOrder, field: Field) -> Arc<Ring> {
    Ring::new(ab_variables(chart.s(), 2 * chart.kappa), order, field).expect("valid ring")
}

/// `k[𝐀, 𝐁, π]` (π last).
pub fn ab_pi_ring(chart: &ChartSpec, order: MonomialOrder, field: Field) -> Arc<Ring> {
    let mut v = ab_variables(chart.s(), 2 * chart.kappa);
    v.push(Var::pi());
    Ring::new(v, order, field).expect("valid ring")
}

/// The matrices `𝐀`, `𝐁` and `H_s` over a ring containing their variables.
#[derive(Clone, Debug)]
pub struct AbMatrices {
    pub ring: Arc<Ring>,
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub h: PolyMatrix,
}

impl AbMatrices {
    pub fn new(chart: &ChartSpec, ring: &Arc<Ring>) -> AbMatrices {
        let (s, t) = (chart.s(), 2 * chart.kappa);
        AbMatrices {
            ring: ring.clone(),
            a: PolyMatrix::variables(ring, Family::A, s, s, 0, 0),
            b: PolyMatrix::variables(ring, Family::B, s, t, 0, 0),
            h: PolyMatrix::antidiagonal(ring, s),
        }
    }

    /// `∧²(𝐀, 𝐁)`: 2-minors of `[𝐀 | 𝐁]`.
    pub fn wedge_ab(&self) -> Vec<Poly> {
        wedge2(&self.a.hconcat(&self.b))
    }

    pub fn isotropy(&self) -> PolyMatrix {
        self.b.transpose().mul(&self.h).mul(&self.b)
    }

    pub fn symmetry(&self) -> PolyMatrix {
        self.a.sub(&self.a.transpose())
    }

    /// `tr(𝐀H)`.
    pub fn trace_ah(&self) -> Poly {
        self.a.mul(&self.h).trace()
    }
}

/// `I = ⟨∧²(𝐀,𝐁), 𝐀 − 𝐀ᵗ, tr(𝐀H)⟩`.
pub fn scheme(m: &AbMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("I", &m.ring);
    out.extend("wedge", m.wedge_ab()).push_matrix("symmetry", &m.symmetry()).push("trace", m.trace_ah());
    out
}

/// `I₁ = ⟨𝐀, ∧²𝐁⟩`.
pub fn component1(m: &AbMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("I1", &m.ring);
    out.push_matrix("A", &m.a).extend("wedge-B", wedge2(&m.b));
    out
}

/// `I₂ = I + ⟨𝐁ᵗH𝐁⟩`.
pub fn component2(m: &AbMatrices) -> NamedIdeal {
    let mut out = scheme(m);
    out.name = "I2".into();
    out.push_matrix("isotropy", &m.isotropy());
    out
}

/// `I₁₂ = ⟨𝐀, ∧²𝐁, 𝐁ᵗH𝐁⟩`.
pub fn component12(m: &AbMatrices) -> NamedIdeal {
    let mut out = component1(m);
    out.name = "I12".into();
    out.push_matrix("isotropy", &m.isotropy());
    out
}

/// Images of the variables of `k[X_3, X_4]` (in `bottom_variables` order)
/// under `X_3 = 𝐁`, `X_4 = 𝐀H − c·id`, with `c` a ring element (`0` on the
/// special fiber, `π` integrally).
pub fn bottom_to_ab(chart: &ChartSpec, m: &AbMatrices, shift: &Poly) -> Vec<Poly> {
    let x4 = m.a.mul(&m.h).sub(&PolyMatrix::scalar(&m.ring, chart.s(), shift));
    let t = 2 * chart.kappa;
    bottom_variables(chart)
        .iter()
        .map(|v| {
            let (i, j) = (v.row as usize - t - 1, v.col as usize);
            if j <= t { m.b.get(i, j - 1).clone() } else { x4.get(i, j - t - 1).clone() }
        })
        .collect()
}

/// Ring for `⟨∧²𝐁, 𝐁ᵗH𝐁⟩` in `b_i_j` only, under the lexicographic order with
/// `b_ij < b_pq` iff `i < p`, or `i = p` and `j < q`. The first ring variable
/// is the largest, so variables are listed from `b_s_t` down to `b_1_1`.
pub fn diagonal_b_ring(s: usize, t: usize, field: Field) -> Arc<Ring> {
    let mut v = Vec::with_capacity(s * t);
    for i in (1..=s).rev() {
        for j in (1..=t).rev() {
            v.push(Var::b(i, j));
        }
    }
    Ring::new(v, MonomialOrder::Lex, field).expect("valid ring")
}

/// The 2-minors `[ij|pq] = b_ip b_jq − b_iq b_jp` for `i < j`, `p < q`.
pub fn bracket_minors(ring: &Arc<Ring>, s: usize, t: usize) -> Vec<Poly> {
    let b = |i: usize, j: usize| Poly::var(ring, Var::b(i, j));
    let mut out = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            for p in 1..=t {
                for q in p + 1..=t {
                    out.push(&(&b(i, p) * &b(j, q)) - &(&b(i, q) * &b(j, p)));
                }
            }
        }
    }
    out
}

/// `f_{αβ}` for `α ≤ β`: `2 Σ_{δ=1}^{r} b_{s+1−δ,α} b_{δ,β}`, plus
/// `b_{r+1,α} b_{r+1,β}` when `s = 2r + 1`. The sum runs over the `s` rows
/// of `𝐁`; it is `(𝐁ᵗH𝐁)_{αβ}` rewritten modulo the 2-minors.
pub fn f_alpha_beta(ring: &Arc<Ring>, s: usize, alpha: usize, beta: usize) -> Poly {
    let b = |i: usize, j: usize| Poly::var(ring, Var::b(i, j));
    let r = s / 2;
    let two = Poly::from_i64(ring, 2);
    let mut out = Poly::zero(ring);
    for d in 1..=r {
        out = &out + &(&two * &(&b(s + 1 - d, alpha) * &b(d, beta)));
    }
    if s % 2 == 1 {
        out = &out + &(&b(r + 1, alpha) * &b(r + 1, beta));
    }
    out
}

/// The claimed Groebner basis `{[ij|pq]} ∪ {f_{αβ} : α ≤ β}`.
pub fn claimed_basis(ring: &Arc<Ring>, s: usize, t: usize) -> Vec<Poly> {
    let mut out = bracket_minors(ring, s, t);
    for alpha in 1..=t {
        for beta in alpha..=t {
            out.push(f_alpha_beta(ring, s, alpha, beta));
        }
    }
    out
}

/// Raw generators `∧²𝐁 ∪ entries(𝐁ᵗH𝐁)`.
pub fn raw_isotropic_generators(ring: &Arc<Ring>, s: usize, t: usize) -> Vec<Poly> {
    let b = PolyMatrix::variables(ring, Family::B, s, t, 0, 0);
    let h = PolyMatrix::antidiagonal(ring, s);
    let mut out = wedge2(&b);
    out.extend(b.transpose().mul(&h).mul(&b).entries().iter().cloned());
    out
}
