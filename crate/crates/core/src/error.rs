use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape token {token:?}: expected a word over {{1,2}} or \"e\"")]
    ParseShape { token: String },
    #[error("invalid tableau token {token:?}")]
    ParseTableau { token: String },
    #[error("invalid permutation token {token:?}")]
    ParsePermutation { token: String },
    #[error("invalid partition token {token:?}")]
    ParsePartition { token: String },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("tableau {0} is not a standard Young-Fibonacci tableau")]
    NotStandard(String),
    #[error("not a saturated chain: step {step} ({from} -> {to}) is not a cover")]
    InvalidChain { step: usize, from: String, to: String },
    #[error("{letter} is not the topmost entry of a column")]
    NotTopEntry { letter: u32 },
    #[error("size {n} exceeds the configured bound {bound}")]
    Oversize { n: usize, bound: usize },
    #[error("local rule precondition violated: {0}")]
    LocalRule(String),
    #[error("bad range [{i}, {j}] for size {n}")]
    BadRange { i: usize, j: usize, n: usize },
    #[error("relation contains a cycle")]
    Cyclic,
    #[error("interval endpoints are not comparable")]
    NotComparable,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
