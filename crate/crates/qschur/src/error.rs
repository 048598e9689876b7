use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("non-exact division in Z[v,v^-1]")]
    NotDivisible,

    #[error("enumeration budget exceeded: {needed} objects, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("interpolated structure constant is not an integer polynomial")]
    IntegralityFailure,

    #[error("held-out check failed at q={q}: interpolation predicts {predicted}, count is {counted}")]
    HeldOutMismatch {
        q: u64,
        predicted: String,
        counted: String,
    },

    #[error("leading-term verification failed for basis matrix {0}")]
    LeadingTermFailure(String),

    #[error("coefficient domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("not realizable in Theta_r: {0}")]
    Unrealizable(String),

    #[error("presentation relation failed: {0}")]
    RelationFailure(String),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("table budget exceeded: n={n}, r={r} (limits: r <= 6 for n = 2, r <= 3 for n = 3)")]
    TableBudget { n: usize, r: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
