use thiserror::Error;

/// Failures of the polynomial layer.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("operands have different coefficient fields")]
    FieldMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// Which resource cap a Groebner computation hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetKind {
    Pairs,
    Degree,
    Terms,
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BudgetKind::Pairs => "pair count",
            BudgetKind::Degree => "degree",
            BudgetKind::Terms => "term count",
        })
    }
}

/// Failures of the Groebner layer.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GbError {
    #[error("budget exceeded ({kind} cap {limit})")]
    Budget { kind: BudgetKind, limit: usize },
    #[error("the ideal is the unit ideal")]
    Improper,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Top-level error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GbError),
    #[error("invalid chart: {0}")]
    Chart(String),
    #[error("golden file: {0}")]
    Golden(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Groebner(GbError::Budget { .. }))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
