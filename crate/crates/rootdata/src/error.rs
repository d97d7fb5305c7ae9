use thiserror::Error;

/// Failures when building or manipulating Cartan matrices and root data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("matrix is not square: row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("matrix is empty")]
    Empty,
    #[error("diagonal entry a[{0}][{0}] = {1}, expected 2")]
    Diagonal(usize, i64),
    #[error("off-diagonal entry a[{0}][{1}] = {2} is positive")]
    PositiveOffDiagonal(usize, usize, i64),
    #[error("zero pattern is not symmetric at ({0}, {1})")]
    ZeroPattern(usize, usize),
    #[error("matrix is not symmetrisable")]
    NotSymmetrisable,
    #[error("supplied symmetriser does not satisfy d_i a_ij = d_j a_ji at ({0}, {1})")]
    BadSymmetriser(usize, usize),
    #[error("matrix is not of finite type")]
    NotFiniteType,
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("at least two simple roots are required")]
    RankTooSmall,
    #[error("vector has length {got}, expected {expected}")]
    Dimension { got: usize, expected: usize },
    #[error("{0}")]
    Datum(String),
    #[error("{0}")]
    Isogeny(String),
}
