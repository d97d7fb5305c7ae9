//! The rank-one interpolating algebra between `U_q(sl2)` and its Langlands
//! dual: the interpolation polynomial, doubly deformed modules, their
//! specialisation at a root of unity and the dual generators.

pub mod check;
pub mod divided;
pub mod dual;
pub mod eps;
pub mod error;
pub mod hh;
pub mod interp;
pub mod qnum;
pub mod suite;

pub use error::LangError;
pub use check::IdentityCheck;
pub use divided::{divided_power_identity, divided_power_route};
pub use dual::{
    dual_generators, dual_relation_check, expected_highest_weights, lem_fond_checks, lem_fond_residual, reprinter_decomposition,
    signed_lem_fond_check, DualGenerators, ReprinterVerdict,
};
pub use eps::{specialize_eps, specialize_generic, EpsModule};
pub use hh::{build_hh_module, commutator_check, single_parameter_check, slice_check, HHModule, ModuleKind};
pub use interp::{brace, brace_at_eps, interpolation_poly, rational_poly, InterpParams};
pub use qnum::{eps_quantum_number, gen_quantum_number, lattice_quantum_number, LatticeSeries};
pub use suite::{liq_suite, LiqSuite};
