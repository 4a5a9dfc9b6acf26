use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {reason} (token `{token}`)")]
    Parse { token: String, reason: String },

    #[error("gap {gap} out of range for permutation of length {len}")]
    GapOutOfRange { gap: usize, len: usize },

    #[error("label {label} out of range for permutation of length {len}")]
    LabelOutOfRange { label: u32, len: usize },

    #[error("cannot remove an entry from the empty permutation")]
    EmptyPermutation,

    #[error("permutation {perm} is not Baxter")]
    NotBaxter { perm: String },

    #[error("not quarter-turn fixed")]
    NotQuarterTurnFixed,

    #[error("permutation {perm} is not fixed under {symmetry}")]
    NotFixed { perm: String, symmetry: String },

    #[error("length {len} is not of the form 4m+1")]
    BadQuarterLength { len: usize },

    #[error("size {n} exceeds brute-force limit {limit}; use the tree or formula methods instead")]
    LimitExceeded { n: usize, limit: usize },

    #[error("node budget {budget} exceeded while expanding the tree")]
    BudgetExceeded { budget: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("label {label} is malformed for rule {rule}")]
    MalformedLabel { rule: String, label: String },

    #[error("inexact division in closed-form count (n = {n})")]
    InexactDivision { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
