use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has no rows")]
    EmptyMatrix,
    #[error("vector length must be positive")]
    ZeroLength,
    #[error("row {row} has length {found}, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration of {0} rows exceeds the 20-row limit")]
    TooManyRows(usize),
    #[error("all-zero generator has no minimum distance")]
    ZeroGenerator,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parity submatrix: {0}")]
    InvalidParity(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation {0} violates the permutation criteria")]
    CriteriaViolated(String),
    #[error("invalid companion choices: {0}")]
    InvalidChoices(String),
    #[error("not an (8,4,4) code: {0}")]
    NotComponentCode(String),
    #[error("array codes are not disjoint: stacked rank {rank} < 12")]
    NotDisjoint { rank: usize },
    #[error("combinatorial properties fail: {0}")]
    PropertyFailure(String),
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("trial count must be positive")]
    InvalidTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
