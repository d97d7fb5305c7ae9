use crystal::CrystalError;
use exactalg::SeriesError;
use repmod::RepError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GqeError {
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("[psi1]({n},{p})! vanishes at h = 0, so row ({n},{p}) cannot be solved")]
    SingularPivot { n: i64, p: usize },
    #[error("no polynomial of degree <= {dmax} fits entry {p}")]
    DegreeExhausted { p: usize, dmax: usize },
    #[error("entries did not vanish for {width} consecutive indices before index {pmax}; inconclusive")]
    TailNotFound { pmax: usize, width: usize },
    #[error("solution is truncated at h^{solution} but the module at h^{module}")]
    TruncationMismatch { solution: usize, module: usize },
    #[error("index {index} is out of range for a datum of rank {rank}")]
    Index { index: usize, rank: usize },
}
