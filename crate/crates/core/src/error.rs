use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is crossing; depth and inner-block counts are undefined")]
    Crossing,
    #[error("support profile is inconsistent: {0}")]
    InconsistentProfile(String),
    #[error("unknown algebra index {0}")]
    UnknownAlgebra(u32),
    #[error("marginal moments of algebra {index} exhausted: order {needed} requested, {available} available")]
    MomentsExhausted { index: u32, needed: usize, available: usize },
    #[error("marginal moments are not positive semidefinite: {0}")]
    NotPositive(String),
    #[error("basis of {size} elements exceeds cap {cap}")]
    BasisTooLarge { size: usize, cap: usize },
    #[error("truncation depth {depth} is insufficient for moment order {order}")]
    InsufficientDepth { depth: usize, order: usize },
    #[error("point lies on the branch cut [{lo}, {hi}]")]
    OnBranchCut { lo: f64, hi: f64 },
    #[error("root search failed in bracket [{lo}, {hi}]: {reason}")]
    RootSearch { lo: f64, hi: f64, reason: String },
    #[error("order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
