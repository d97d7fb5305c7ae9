use exactalg::SeriesError;
use thiserror::Error;

use crate::edge::Sign;

/// Failures when evaluating or transforming colourings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("edge ({n}, {k}) is outside 1 <= k <= n")]
    EdgeOutOfRange { n: i64, k: i64 },
    #[error("no value stored for edge ({sign}, {n}, {k})")]
    MissingValue { sign: Sign, n: i64, k: i64 },
    #[error("colouring is truncated at order {have}, but order {want} was requested")]
    Truncation { have: usize, want: usize },
    #[error("isogeny shift d = {d} is outside 0 <= d < {xi}")]
    ShiftOutOfRange { d: i64, xi: i64 },
    #[error("isogeny scaling must be positive, got {0}")]
    BadScaling(i64),
    #[error("value has a pole at u = {0}")]
    Pole(String),
    #[error("value at edge ({sign}, {n}, {k}) depends on h, but a field value is required")]
    NotFieldValued { sign: Sign, n: i64, k: i64 },
    #[error("value at edge ({sign}, {n}, {k}) is not invertible")]
    NotAdmissible { sign: Sign, n: i64, k: i64 },
    #[error("factorial index k = {k} exceeds n = {n}")]
    FactorialRange { n: i64, k: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
