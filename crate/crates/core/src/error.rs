use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("darga undefined for zero")]
    DargaOfZero,
    #[error("inexact division: {dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("not a Ferrers board: heights {0:?} are not weakly increasing")]
    NotFerrers(Vec<i64>),
    #[error("negative column height {0}")]
    NegativeHeight(i64),
    #[error("board with heights {0:?} is not admissible (tallest column exceeds {1})")]
    Inadmissible(Vec<usize>, usize),
    #[error("invalid step spec: {0}")]
    InvalidSteps(String),
    #[error("invalid board spec {spec:?}: {reason}")]
    BoardSpec { spec: String, reason: String },
    #[error("cell ({0},{1}) is not on the board")]
    CellOffBoard(usize, usize),
    #[error("placement is not full: {0} rooks on a {1}x{1} grid")]
    NotFull(usize, usize),
    #[error("rooks attack each other: {0}")]
    Attacking(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("enumeration of {needed} matrices exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("matrix entry ({0},{1}) is nonzero outside the board")]
    SupportViolation(usize, usize),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("word multiset {got:?} does not match block widths {want:?}")]
    MultisetMismatch { got: Vec<usize>, want: Vec<usize> },
    #[error("board is not constant on block {0}")]
    BlockNotConstant(usize),
    #[error("invalid statistic request: {0}")]
    InvalidStat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
