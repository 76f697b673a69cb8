//! Exact arithmetic over `Q[v^(1/2), v^(-1/2), g(1), .., g(n-1)]` modulo the Gauss-sum relations,
//! Laurent polynomials and rational functions over it, and a numeric evaluator.

mod coeff;
mod json;
mod laurent;
mod monomial;
mod numeric;
mod rational;

pub use coeff::{CoeffElement, CoeffKey};
pub use json::{poly_from_json, poly_to_json, rational_to_json};
pub use laurent::LaurentPoly;
pub use monomial::{normalize_monomial, GaussMonomial, Normalized};
pub use numeric::{gauss_sums_numeric, Evaluate, NumericBackend};
pub use rational::{rational_eq, RationalFunction};
