//! Exterior-algebra computations in `∧ⁿ V`, `V = Fⁿ ⊗_{F₀} F`: index-set
//! combinatorics, exact wedge expansions over Laurent coefficients, worst
//! terms, and the lattice of the strengthened spin condition.

pub mod cases;
pub mod element;
pub mod gbasis;
pub mod index;
pub mod lattice;

pub use cases::{CaseFamily, CaseId, Prediction, WorstTermRow};
pub use element::{wedge_expand, BasisVector, WedgeElement};
pub use gbasis::GBasis;
pub use index::{IndexError, IndexSet};
