use thiserror::Error;

/// Errors raised by the arithmetic and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not of the form -1/r with r in (0,1)")]
    NotNegativeReciprocal(String),
    #[error("zero denominator while evaluating continued fraction {0}")]
    EvalZeroDenominator(String),
    #[error("{0} is not in the open interval (0,1)")]
    NotInUnitInterval(String),
    #[error("boundary slope {0} is greater than -1; change coordinates first")]
    SlopeAboveMinusOne(String),
    #[error("invariant {0} is an integer: fewer than three singular fibers")]
    TooFewSingularFibers(String),
    #[error("twisting number must be negative, got {0}")]
    NonNegativeTwisting(String),
    #[error("imbalanced dividing sets: {0} is not expressible over denominator {1}")]
    ImbalancedDividingSets(String, String),
    #[error("slope undefined at this twisting (n1 = {0})")]
    SlopeUndefined(String),
    #[error("sum of invariants lies in the gap region [2, 9/4): A = {0}")]
    GapRegion(String),
    #[error("ruling slope must be nonzero")]
    ZeroRuling,
    #[error("c1 not liftable: rotation vector is not in the column span of the linking matrix")]
    C1NotLiftable,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid contact index (n={n}, i={i}, j={j})")]
    InvalidIndex { n: i64, i: i64, j: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
