//! Generalised Cartan matrices, root data, isogenies, the Langlands dual
//! datum and combinatorics of the root lattice.

pub mod cartan;
pub mod datum;
pub mod error;
pub mod lattice;
pub mod roots;

pub use cartan::{all_finite_types, connected_finite_types, finite_type, named, validate_gcm, CartanMatrix};
pub use datum::{langlands_dual, langlands_isogeny, Isogeny, RootDatum, Weight};
pub use error::RootError;
pub use lattice::{
    check_lemma_ad, check_lemma_ad0, check_lemma_dominant, serre_set_a, sharp, LemmaReport, RootLatticeElement, Sign,
};
pub use roots::positive_roots;
