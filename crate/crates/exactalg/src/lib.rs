//! Exact coefficient arithmetic: rationals, cyclotomic fields, polynomials,
//! Laurent polynomials and power series truncated in one or two variables.

pub mod coeff;
pub mod cyclo;
pub mod error;
pub mod laurent;
pub mod linsolve;
pub mod ltrunc;
pub mod mat;
mod ops;
pub mod poly;
pub mod rational;
pub mod ratfn;
pub mod series;
pub mod series2;

pub use coeff::{Coeff, RingElem};
pub use cyclo::{cyclotomic_polynomial, quantum_factorial_cyclotomic, quantum_number_cyclotomic, Cyclo};
pub use error::SeriesError;
pub use laurent::LaurentPoly;
pub use ltrunc::LaurentTrunc;
pub use mat::SparseMat;
pub use poly::{Poly1, Poly2};
pub use rational::{ri, rq, Rat};
pub use ratfn::RatFn;
pub use series::{quantum_number_series, series_exp, Series};
pub use series2::Series2;
