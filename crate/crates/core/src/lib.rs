//! Verification engine for ramified unitary local models of signature
//! `(n-1, 1)` at strongly non-special level.

pub mod chart;
pub mod coeff;
pub mod error;
pub mod golden;
pub mod groebner;
pub mod ideals;
pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod ring;
pub mod text;
pub mod var;
pub mod verify;
pub mod wedge;

pub use coeff::{Coeff, Field};
pub use error::{BudgetKind, Error, GbError, PolyError, Result};
pub use laurent::{LaurentPi, Valuation};
pub use poly::Poly;
pub use ring::{Monomial, MonomialOrder, OrderKind, Ring};
pub use var::{Family, Var};
pub use groebner::{Budget, Ideal, MonomialIdeal};
pub use matrix::PolyMatrix;
pub use chart::ChartSpec;
