use thiserror::Error;

/// Errors raised anywhere in the computation pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-unit constant term")]
    NonUnit,
    #[error("log requires constant term 1")]
    LogConstant,
    #[error("exp requires constant term 0")]
    ExpConstant,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("unsupported Dynkin type {0}")]
    UnsupportedType(String),
    #[error("node out of range: {node} (rank {rank})")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("crossed node set is empty")]
    EmptyCrossing,
    #[error("weight {0} is not integral")]
    NotIntegral(String),
    #[error("weight {0} is not p-dominant")]
    NotDominant(String),
    #[error("genericity failure after {0} attempts")]
    Genericity(usize),
    #[error("degree mismatch: expected {expected}, got {got}")]
    Degree { expected: usize, got: usize },
    #[error("class is not invariant under the Levi Weyl group")]
    NotInvariant,
    #[error("convention or genericity fault: {0}")]
    NonIntegral(String),
    #[error("localization sum is not a constant")]
    NotConstant,
    #[error("division misalignment: {0}")]
    Division(String),
    #[error("q-offset mismatch: {0} vs {1}")]
    OffsetMismatch(String, String),
    #[error("basis not independent at this order")]
    RankDeficient,
    #[error("not in span")]
    NotInSpan,
    #[error("dimension {0} must be odd and at least 3")]
    BasisDimension(usize),
    #[error("missing monomial {0}")]
    MissingMonomial(String),
    #[error("denominator does not clear: {0}")]
    NonLaurent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
