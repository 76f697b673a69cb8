//! Metaplectic ice: six-vertex models with Gauss-sum weights and their Yang-Baxter equations.
//!
//! - [`coeffring`]: exact coefficient ring, Laurent polynomials, rational functions, numeric Gauss sums.
//! - [`lattice`]: ice systems, state enumeration, Boltzmann weights, partition functions, GT patterns.
//! - [`rmatrix`]: R-vertex weight tables, basis changes, twists, matrix form.
//! - [`ybe`]: exhaustive RTT, RRR and unitarity checks.
//! - [`scattering`]: scattering constants, Whittaker values and the scattering identity.

pub mod coeffring;
pub mod error;
pub mod lattice;
pub mod rmatrix;
pub mod scattering;
pub mod ybe;

pub use coeffring::{CoeffElement, LaurentPoly, RationalFunction};
pub use error::{Error, Result};
pub use lattice::{DecoratedSpin, IceState, IceSystem, LeftBoundary, Partition, Spin, Variant, WeightTable};
pub use rmatrix::{RCase, RTable, Vars};
