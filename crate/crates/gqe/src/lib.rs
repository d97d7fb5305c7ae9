//! Generalised quantum equations: the triangular solver, the deformed
//! commutator and the trivialised generators it produces.

pub mod error;
pub mod operators;
pub mod solve;

pub use error::GqeError;
pub use operators::{classical_frame, deformed_commutator_operator, gqe_serre_residual, trivialised_generator, SerreResidual};
pub use solve::{rhs_row, solve, verify_solution, GqeEquation, GqeSolution, SolveOutcome, SolverParams, Witness};
