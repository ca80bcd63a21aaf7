//! Groebner bases, ideal operations and monomial ideals.

mod buchberger;
mod ideal;
mod monomial_ideal;
mod reduce;

pub use buchberger::{
    first_failing_pair, groebner_basis, groebner_basis_with_stats, is_reduced_basis, satisfies_buchberger_criterion,
    Budget, GbStats, ENV_DEGREE, ENV_PAIRS, ENV_TERMS,
};
pub use ideal::Ideal;
pub use monomial_ideal::MonomialIdeal;
pub use reduce::{reduce, s_polynomial};
