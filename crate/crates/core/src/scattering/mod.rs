//! Kazhdan-Patterson scattering constants and their ice-model counterparts:
//! the `tau` coefficients, their match with the modified R-vertex, Whittaker
//! values as charge-restricted partition functions, the scattering identity
//! with a glued R-vertex, and the intertwiner diagram as a finite matrix.

mod diagram;
mod identity;
mod tau;
mod whittaker;

pub use diagram::{intertwiner_check, intertwiner_matrix, DiagramReport};
pub use identity::{scattering_identity_check, ScatteringCase, ScatteringReport};
pub use tau::{tau1, tau2, taumatch_check, TauMatchCase, TauMatchReport, WeightVector};
pub use whittaker::{
    whittaker_report, whittaker_system, whittaker_value, whittaker_value_with, WhittakerEntry, WhittakerReport,
};

/// All vectors in `[0, n)^r`, lexicographic.
pub(crate) fn charge_vectors(n: u32, r: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n as i64).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}
