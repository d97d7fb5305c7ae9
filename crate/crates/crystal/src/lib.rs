//! Colourings of the rank-one global crystal, their congruence classes, the
//! h-admissibility axioms, and colouring transformers (Cartan dual, isogeny,
//! interpolation, specialisation, h-admissible expansion).

pub mod axioms;
pub mod colouring;
pub mod edge;
pub mod error;
pub mod expansion;
pub mod interp;
pub mod parse;

pub use axioms::{check_h_admissible, Axiom, AxiomVerdict, Status};
pub use colouring::{isogeny_colouring, Colouring, IColouring, PointFn};
pub use edge::{edges_up_to, Edge, Sign};
pub use error::CrystalError;
pub use expansion::{h_admissible_expansion, Expansion};
pub use interp::{field_value, interpolation_colouring, specialize_value, InterpColouring};
pub use parse::parse_poly_series;
