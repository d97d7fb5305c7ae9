//! Weight modules over exact and truncated coefficient rings: the rank-one
//! modules `L(n, psi)`, restriction along isogenies, characters, Freudenthal
//! multiplicities and Langlands character duality.

pub mod character;
pub mod error;
pub mod freudenthal;
pub mod module;
pub mod restrict;
pub mod scalar;

pub use character::Character;
pub use error::RepError;
pub use freudenthal::{decompose_into_irreducibles, freudenthal_char, langlands_dual_char, weyl_dimension};
pub use module::{a2_defining, build_l, sl2_datum, verify_slf_relations, Gen, RelationCheck, RelationReport, WeightModule};
pub use restrict::isogeny_restrict;
pub use scalar::ModuleScalar;
