use thiserror::Error;

/// Errors surfaced by group construction and the structural algorithms.
///
/// Every operation that walks a whole group carries an explicit cap; blowing
/// a cap is a first-class error (`OrderCapExceeded` etc.), never a silent
/// truncation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("group order {order} exceeds enumeration cap {cap}")]
    OrderCapExceeded { order: u128, cap: u128 },

    #[error("coset index {index} exceeds cap {cap}")]
    CosetCapExceeded { index: u128, cap: u128 },

    #[error("class count exceeds cap {cap}")]
    ClassCapExceeded { cap: usize },

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("subgroup relation violated: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("section is not simple (order {order} with a proper normal subgroup)")]
    SectionNotSimple { order: u128 },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
