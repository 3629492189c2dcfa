use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0:?} is not a rearrangement of 1..n")]
    NotABijection(Vec<usize>),

    #[error("word {0:?} repeats a letter")]
    RepeatedLetter(Vec<usize>),

    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("size {n} exceeds the enumeration ceiling {max}")]
    BudgetExceeded { n: usize, max: usize },

    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("q-binomial [{n} {k}] requires k <= n")]
    OutOfRange { n: usize, k: usize },

    #[error("polynomial is not symmetric about center {center}/2")]
    NotExpandable { center: usize },

    #[error("{0}")]
    NotInDomain(String),

    #[error("{family} gamma coefficients at n={n} disagree with the direct enumeration")]
    MismatchAgainstDirect { family: &'static str, n: usize },

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("operation requires a non-empty permutation")]
    EmptyPermutation,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
