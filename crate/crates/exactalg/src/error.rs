use thiserror::Error;

/// Failures of truncated-series arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("argument of exp has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("valuation of numerator ({num}) is below valuation of denominator ({den})")]
    ValuationMismatch { num: usize, den: usize },
    #[error("division by a series that vanishes to order {0}")]
    ZeroDivisor(usize),
    #[error("leading coefficient of the divisor is not invertible")]
    NotInvertible,
    #[error("series has negative valuation {0} in h'")]
    NotRegular(i64),
}
