use crystal::CrystalError;
use rootdata::RootError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error("basis has {labels} labels but {weights} weights")]
    BasisLength { labels: usize, weights: usize },
    #[error("weight {weight:?} has {got} coordinates, lattice rank is {rank}")]
    WeightRank { weight: Vec<i64>, got: usize, rank: usize },
    #[error("generator {0} is out of range for this datum")]
    Generator(String),
    #[error("operator {name} has shape {got:?}, module dimension is {dim}")]
    Shape { name: String, got: (usize, usize), dim: usize },
    #[error("modules or characters live over different root data")]
    DatumMismatch,
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("character is not Weyl-symmetric at weight {weight:?} under s_{index}")]
    NotWeylSymmetric { weight: Vec<i64>, index: usize },
    #[error("irreducible L({weight:?}) would enter with coefficient {coeff}")]
    NegativeCoefficient { weight: Vec<i64>, coeff: i64 },
    #[error("Freudenthal total {freudenthal} differs from Weyl dimension {weyl}")]
    DimensionMismatch { freudenthal: u64, weyl: String },
    #[error("non-integral multiplicity at weight {0:?}")]
    NonIntegral(Vec<i64>),
}
