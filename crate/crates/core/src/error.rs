use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown lattice class `{0}`")]
    UnknownClass(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("expected an even length, got {0}")]
    OddLength(usize),
    #[error("entries must be nonnegative: {0:?}")]
    NegativeEntry(Vec<i64>),
    #[error("not a partition (must be weakly decreasing and nonnegative): {0:?}")]
    NotPartition(Vec<i64>),
    #[error("partition {parts:?} has more than {nvars} parts")]
    TooManyParts { parts: Vec<u32>, nvars: usize },
    #[error("need d <= d', got d = {d}, d' = {dp}")]
    DegreeOrder { d: u32, dp: u32 },
    #[error("negative Schur coefficient {coeff} at {lambda:?}: input is not a character")]
    NotACharacter { lambda: Vec<u32>, coeff: i128 },
    #[error("{0:?} is not in the index set")]
    NotInIndexSet(Vec<u32>),
    #[error("subsets have different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a permutation of 1..={n}: {perm:?}")]
    NotPermutation { perm: Vec<usize>, n: usize },
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("unsupported field size {0}, expected 2 or 3")]
    FieldSize(u32),
    #[error("denominator is not monic, exact expansion unavailable")]
    NonMonic,
    #[error("invalid block Levi: {0}")]
    InvalidLevi(String),
    #[error("{0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("parse error: {0}")]
    Parse(String),
}
