use thiserror::Error;

/// Errors produced by the algebra, character and table routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("exponent has {got} entries, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("geometric factor with step m = 0 does not converge")]
    NonConvergentFactor,

    #[error("empty product has no coefficient ring to live in")]
    EmptyProduct,

    #[error("unsupported root system {family}{rank}")]
    UnsupportedRootSystem { family: char, rank: usize },

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("weight {0:?} has the wrong length for rank {1}")]
    WeightLength(Vec<i64>, usize),

    #[error("ambiguous half-spin pair: D-type weight {0:?} has nonzero last coordinate")]
    HalfSpinPair(Vec<i64>),

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("rank {rank} outside the supported range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },

    #[error("polynomial is not Weyl-invariant at {0}")]
    NotInvariant(String),

    #[error("not a character: weight {weight:?} has multiplicity {coeff}")]
    NotACharacter { weight: Vec<i64>, coeff: String },

    #[error("constant-term oracle is capped at rank {cap}, got {rank}")]
    OracleRankCap { rank: usize, cap: usize },

    #[error("inexact division by {0}")]
    InexactDivision(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
