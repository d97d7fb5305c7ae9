use exactalg::SeriesError;
use repmod::RepError;
use rootdata::RootError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LangError {
    #[error("g must be at least 1")]
    ZeroG,
    #[error("n = {n} is not a multiple of g = {g}")]
    NotDivisible { n: i64, g: u32 },
    #[error("finite modules need n >= 0, got {0}")]
    NegativeHighestWeight(i64),
    #[error("interpolation polynomial coefficient at u^{0} is not rational")]
    NotRational(i64),
    #[error("power of X^{sign} does not map the weight sublattice into itself (basis vector m_{column})")]
    NotStabilised { sign: char, column: usize },
    #[error("dual generator entry ({row}, {column}) has h'-valuation {valuation}")]
    Irregular { row: usize, column: usize, valuation: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Root(#[from] RootError),
}
