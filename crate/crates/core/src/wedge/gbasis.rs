//! The eigenbasis `g_1, …, g_{2n}` of `V`, the split bases used to pin down
//! the spin eigenspaces, and the elements `g_S` and `g_S − sgn(σ_S) g_{S⊥}`.
//!
//! Coordinates are taken in the basis `e_1, …, e_{2n}` of `Λ_κ ⊗ 𝒪_F`:
//! `e_i = π⁻¹e_i ⊗ 1` and `e_{n+i} = e_i ⊗ 1` for `i ≤ κ`, and `e_i = e_i ⊗ 1`,
//! `e_{n+i} = πe_i ⊗ 1` for `i > κ`. In these coordinates an element of
//! `∧ⁿ V` lies in `W(Λ_κ)` exactly when all its coefficients are integral.

use crate::coeff::Field;
use crate::laurent::LaurentPi;

use super::element::{laurent_determinant, wedge_expand, BasisVector, WedgeElement};
use super::index::IndexSet;

fn zero_vec(field: Field, len: usize) -> BasisVector {
    vec![LaurentPi::zero(field); len]
}

/// `g_1, …, g_{2n}` in the `Λ_κ` coordinates:
/// for `i ≤ κ`, `g_i = e_{n+i} − πe_i` and `g_{n+i} = ½(e_{n+i} + πe_i)`;
/// for `i > κ`, `g_i = e_i − π⁻¹e_{n+i}` and `g_{n+i} = ½(e_i + π⁻¹e_{n+i})`.
pub fn g_vectors(field: Field, n: usize, kappa: usize) -> Vec<BasisVector> {
    let half = |k: i32| LaurentPi::ratio(field, 1, 2, k);
    let mut out = vec![zero_vec(field, 2 * n); 2 * n];
    for i in 0..n {
        let (lo, hi) = (i, n + i);
        if i < kappa {
            out[lo][hi] = LaurentPi::from_i64(field, 1);
            out[lo][lo] = LaurentPi::ratio(field, -1, 1, 1);
            out[hi][hi] = half(0);
            out[hi][lo] = half(1);
        } else {
            out[lo][lo] = LaurentPi::from_i64(field, 1);
            out[lo][hi] = LaurentPi::ratio(field, -1, 1, -1);
            out[hi][lo] = half(0);
            out[hi][hi] = half(-1);
        }
    }
    out
}

/// The family `g_1, …, g_{2n}` with the expansions `g_S` it generates.
#[derive(Clone, Debug)]
pub struct GBasis {
    pub field: Field,
    pub n: usize,
    pub kappa: usize,
    pub vectors: Vec<BasisVector>,
}

impl GBasis {
    pub fn new(field: Field, n: usize, kappa: usize) -> GBasis {
        assert!(2 * kappa <= n, "kappa must satisfy 2*kappa <= n");
        GBasis { field, n, kappa, vectors: g_vectors(field, n, kappa) }
    }

    /// `g_S`, the wedge of `g_k` for `k ∈ S` in increasing order.
    pub fn g_s(&self, s: &IndexSet) -> WedgeElement {
        let rows: Vec<BasisVector> = s.members().iter().map(|&k| self.vectors[k - 1].clone()).collect();
        wedge_expand(self.field, &rows)
    }

    /// `g_S − sgn(σ_S) g_{S⊥}`.
    pub fn dual_difference(&self, s: &IndexSet) -> WedgeElement {
        let gp = self.g_s(&s.perp());
        let g = self.g_s(s);
        if s.sign() == 1 { g.sub(&gp) } else { g.add(&gp) }
    }
}

/// Coordinates used for the split-basis comparison: `u_i = e_i ⊗ 1` at
/// position `i`, `v_i = πe_i ⊗ 1` at position `n + i`.
fn uv(field: Field, n: usize, i: usize, cu: LaurentPi, cv: LaurentPi) -> BasisVector {
    let mut r = zero_vec(field, 2 * n);
    r[i - 1] = cu;
    r[n + i - 1] = cv;
    r
}

/// The `g`-basis in `(u, v)` coordinates.
pub fn g_basis_uv(field: Field, n: usize) -> Vec<BasisVector> {
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=n {
        out.push(uv(field, n, i, LaurentPi::from_i64(field, 1), LaurentPi::ratio(field, -1, 1, -1)));
    }
    for i in 1..=n {
        out.push(uv(field, n, i, LaurentPi::ratio(field, 1, 2, 0), LaurentPi::ratio(field, 1, 2, -1)));
    }
    out
}

/// The split ordered basis `f_1, …, f_{2n}` fixing the labels of the spin
/// eigenspaces, in `(u, v)` coordinates. For even `n = 2m` it is
/// `−π⁻¹e_1, …, −π⁻¹e_m, e_{m+1}, …, e_n, e_1, …, e_m, πe_{m+1}, …, πe_n`;
/// for odd `n = 2m+1` the middle pair is replaced by the eigenvectors
/// `e_{m+1} ⊗ 1 − πe_{m+1} ⊗ π⁻¹` and `½(e_{m+1} ⊗ 1 + πe_{m+1} ⊗ π⁻¹)`.
pub fn split_basis_uv(field: Field, n: usize) -> Vec<BasisVector> {
    let m = n / 2;
    let one = || LaurentPi::from_i64(field, 1);
    let zero = || LaurentPi::zero(field);
    // −π⁻¹e_i ⊗ 1 = −π⁻² v_i.
    let neg_inv = || LaurentPi::ratio(field, -1, 1, -2);
    let mut first = Vec::with_capacity(n);
    let mut second = Vec::with_capacity(n);
    for i in 1..=n {
        if i <= m {
            first.push(uv(field, n, i, zero(), neg_inv()));
            second.push(uv(field, n, i, one(), zero()));
        } else if n % 2 == 1 && i == m + 1 {
            first.push(uv(field, n, i, one(), LaurentPi::ratio(field, -1, 1, -1)));
            second.push(uv(field, n, i, LaurentPi::ratio(field, 1, 2, 0), LaurentPi::ratio(field, 1, 2, -1)));
        } else {
            first.push(uv(field, n, i, one(), zero()));
            second.push(uv(field, n, i, zero(), one()));
        }
    }
    first.extend(second);
    first
}

/// `det(g) / det(f)`: the determinant of the transformation matrix from the
/// split basis to the `g`-basis. `None` if `det(f)` is not a monomial
/// (it always is for these bases).
pub fn transition_determinant(field: Field, n: usize) -> Option<LaurentPi> {
    let dg = laurent_determinant(field, &g_basis_uv(field, n));
    let df = laurent_determinant(field, &split_basis_uv(field, n));
    let mut it = df.iter();
    let (k, c) = it.next()?;
    if it.next().is_some() {
        return None;
    }
    Some(dg.mul(&LaurentPi::term(c.inv(), -k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Valuation;

    #[test]
    fn g_vectors_span_lattice_pairs() {
        let q = Field::Rationals;
        let g = GBasis::new(q, 5, 1);
        // g_i ∧ g_{n+i} is a unit multiple of e_i ∧ e_{n+i} (times π^{±1}).
        for i in 1..=5 {
            let s = [g.vectors[i - 1].clone(), g.vectors[4 + i].clone()];
            let det = laurent_determinant(q, &[vec![s[0][i - 1].clone(), s[0][4 + i].clone()], vec![s[1][i - 1].clone(), s[1][4 + i].clone()]]);
            let expected = if i <= 1 { Valuation::Finite(1) } else { Valuation::Finite(-1) };
            assert_eq!(det.valuation(), expected);
        }
    }

    #[test]
    fn split_basis_has_unit_transition_determinant_for_odd_n() {
        for n in [3, 5, 7, 9] {
            let d = transition_determinant(Field::Rationals, n).unwrap();
            assert_eq!(d, LaurentPi::from_i64(Field::Rationals, 1), "n = {n}");
        }
    }

    #[test]
    fn g_s_weight_is_preserved() {
        let g = GBasis::new(Field::Rationals, 5, 2);
        for s in IndexSet::all(5).into_iter().step_by(7) {
            let w = s.weight();
            for (t, _) in g.g_s(&s).terms() {
                assert_eq!(t.weight(), w);
            }
        }
    }
}
