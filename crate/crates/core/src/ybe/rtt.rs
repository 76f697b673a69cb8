use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{Failure, YbeReport};
use crate::coeffring::{rational_eq, RationalFunction};
use crate::error::Result;
use crate::lattice::{DecoratedSpin, Mutation, Spin, Variant, WeightTable};
use crate::rmatrix::{lifted_labels, ChargeMode, RBase, RTable, Vars};

/// Boundary of the train picture: `sigma`, `tau` enter on the left (bottom, top),
/// `theta`, `rho` leave on the right (top, bottom), `beta` is the top vertical
/// edge and `alpha` the bottom one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RTTBoundary {
    pub sigma: DecoratedSpin,
    pub tau: DecoratedSpin,
    pub beta: Spin,
    pub theta: DecoratedSpin,
    pub rho: DecoratedSpin,
    pub alpha: Spin,
}

impl fmt::Display for RTTBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma={} tau={} beta={} theta={} rho={} alpha={}",
            self.sigma, self.tau, self.beta, self.theta, self.rho, self.alpha
        )
    }
}

/// Weights used on both sides of the train equation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RttConfig {
    pub n: u32,
    /// Gamma rows with the Gamma R-vertex, or Modified rows with the modified R-vertex.
    pub variant: Variant,
    /// Integer representatives per residue on `+` boundary edges.
    pub lifts: u32,
    pub mutation: Option<Mutation>,
    pub max_cases: Option<usize>,
}

impl RttConfig {
    pub fn new(n: u32, variant: Variant) -> Self {
        Self {
            n,
            variant,
            lifts: 2,
            mutation: None,
            max_cases: max_cases_from_env(),
        }
    }

    pub fn rows(&self) -> WeightTable {
        WeightTable::new(self.variant, self.n).with_mutation(self.mutation)
    }

    pub fn r_table(&self) -> RTable {
        let base = match self.variant {
            Variant::Gamma => RBase::Gamma,
            Variant::Modified => RBase::Rhat,
        };
        RTable::new(base, self.n).with_mode(ChargeMode::Integer)
    }
}

/// Reads `ICE_MAX_CASES`, if set to a positive integer.
pub fn max_cases_from_env() -> Option<usize> {
    std::env::var("ICE_MAX_CASES")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&m| m > 0)
}

/// All boundaries with an even number of `+` among the six edges; `+` edges run
/// over `lifts` integer representatives of every residue, `-` edges carry 0.
pub fn rtt_boundaries(n: u32, lifts: u32) -> Vec<RTTBoundary> {
    let ls = lifted_labels(n, lifts);
    let mut out = Vec::new();
    for &sigma in &ls {
        for &tau in &ls {
            for &theta in &ls {
                for &rho in &ls {
                    for beta in Spin::BOTH {
                        for alpha in Spin::BOTH {
                            let plus = [sigma.spin, tau.spin, beta, theta.spin, rho.spin, alpha]
                                .iter()
                                .filter(|s| s.is_plus())
                                .count();
                            if plus % 2 == 0 {
                                out.push(RTTBoundary {
                                    sigma,
                                    tau,
                                    beta,
                                    theta,
                                    rho,
                                    alpha,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// One internal configuration of a side of the train equation: the two
/// internal horizontal labels, the internal vertical spin, and the product of
/// the three vertex weights.
pub type RttTerm = (DecoratedSpin, DecoratedSpin, Spin, RationalFunction);

/// Nonzero terms on both sides of the train equation for one boundary.
///
/// Left: the R-vertex takes `(sigma, tau)` to `(nu, mu)`, then the `z1` row
/// runs `nu -> theta` under `beta` and the `z2` row runs `mu -> rho` above `alpha`.
/// Right: the rows act first (`sigma -> phi` at `z1`, `tau -> psi` at `z2`),
/// then the R-vertex takes `(phi, psi)` to `(theta, rho)`.
pub fn rtt_terms(cfg: &RttConfig, b: &RTTBoundary) -> (Vec<RttTerm>, Vec<RttTerm>) {
    let vars = Vars::pair();
    let rows = cfg.rows();
    let r = cfg.r_table();
    let row = |l, t, rt, bt, i| RationalFunction::from_poly(rows.local_weight(l, t, rt, bt, i, 2));
    let mut lhs = Vec::new();
    for (nu, mu, w) in r.outputs(b.sigma, b.tau, &vars) {
        for gamma in Spin::BOTH {
            let v1 = row(nu, b.beta, b.theta, gamma, 0);
            if v1.is_zero() {
                continue;
            }
            let v2 = row(mu, gamma, b.rho, b.alpha, 1);
            if v2.is_zero() {
                continue;
            }
            lhs.push((nu, mu, gamma, &w * &v1 * v2));
        }
    }
    let mut rhs = Vec::new();
    let mut ins = vec![(b.theta, b.rho)];
    if b.theta != b.rho {
        ins.push((b.rho, b.theta));
    }
    for (phi, psi) in ins {
        let w = r.weight(phi, psi, b.theta, b.rho, &vars);
        if w.is_zero() {
            continue;
        }
        for delta in Spin::BOTH {
            let v1 = row(b.sigma, delta, phi, b.alpha, 0);
            if v1.is_zero() {
                continue;
            }
            let v2 = row(b.tau, b.beta, psi, delta, 1);
            if v2.is_zero() {
                continue;
            }
            rhs.push((phi, psi, delta, &v1 * &v2 * &w));
        }
    }
    (lhs, rhs)
}

/// Both sides of the train equation for one boundary, summed.
pub fn rtt_check(cfg: &RttConfig, b: &RTTBoundary) -> (RationalFunction, RationalFunction) {
    let (l, r) = rtt_terms(cfg, b);
    let sum = |ts: Vec<RttTerm>| {
        ts.into_iter()
            .fold(RationalFunction::zero(2, cfg.n), |acc, t| acc + t.3)
    };
    (sum(l), sum(r))
}

/// Runs [`rtt_check`] over every boundary from [`rtt_boundaries`], in parallel.
pub fn rtt_check_all(cfg: &RttConfig) -> Result<YbeReport> {
    let mut boundaries = rtt_boundaries(cfg.n, cfg.lifts);
    let mut report = YbeReport::new(
        "rtt",
        "train Yang-Baxter equation for row vertices and the R-vertex",
        cfg.n,
        &cfg.variant.to_string(),
    );
    if let Some(m) = cfg.max_cases {
        if boundaries.len() > m {
            boundaries.truncate(m);
            report.truncated = true;
        }
    }
    let results: Vec<Result<Option<Failure>>> = boundaries
        .par_iter()
        .map(|b| {
            let (lhs, rhs) = rtt_check(cfg, b);
            Ok((!rational_eq(&lhs, &rhs)?).then(|| Failure {
                boundary: b.to_string(),
                lhs: lhs.simplified(),
                rhs: rhs.simplified(),
            }))
        })
        .collect();
    for r in results {
        report.record(r?);
    }
    Ok(report)
}
