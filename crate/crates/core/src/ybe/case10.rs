use serde::Serialize;

use super::rtt::{rtt_terms, RTTBoundary, RttConfig, RttTerm};
use crate::coeffring::{rational_eq, RationalFunction};
use crate::error::{invalid, Result};
use crate::lattice::{DecoratedSpin, Spin, Variant};

/// One nonzero internal configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case10Row {
    /// `(nu, mu, gamma)` on the left side, `(phi, psi, delta)` on the right.
    pub internal: [String; 3],
    pub weight: RationalFunction,
}

/// Both sides of the train equation at one of the three worked boundaries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Case10Table {
    pub name: String,
    pub n: u32,
    pub k: i64,
    pub boundary: RTTBoundary,
    pub lhs: Vec<Case10Row>,
    pub rhs: Vec<Case10Row>,
    pub lhs_total: RationalFunction,
    pub rhs_total: RationalFunction,
    pub equal: bool,
}

fn rows(terms: Vec<RttTerm>) -> Vec<Case10Row> {
    terms
        .into_iter()
        .map(|(x, y, s, w)| Case10Row {
            internal: [x.to_string(), y.to_string(), s.symbol().to_string()],
            weight: w.simplified(),
        })
        .collect()
}

/// The boundaries `(sigma, tau, beta, theta, rho, alpha)`:
/// `(+(k+1), +1, -, +k, -0, +)`, `(+1, +(k+1), -, +k, -0, +)` and `(+1, +1, -, +0, -0, +)`,
/// evaluated with Gamma rows and the Gamma R-vertex on integer charges.
pub fn case10_tables(n: u32, k: i64) -> Result<Vec<Case10Table>> {
    if n < 2 || k.rem_euclid(n as i64) == 0 {
        return invalid(format!("need n >= 2 and k not divisible by n (n = {n}, k = {k})"));
    }
    let p = DecoratedSpin::plus;
    let m0 = DecoratedSpin::minus0();
    let cases = [
        ("10a", p(k + 1), p(1), p(k)),
        ("10b", p(1), p(k + 1), p(k)),
        ("10c", p(1), p(1), p(0)),
    ];
    let mut cfg = RttConfig::new(n, Variant::Gamma);
    cfg.max_cases = None;
    let mut out = Vec::new();
    for (name, sigma, tau, theta) in cases {
        let boundary = RTTBoundary {
            sigma,
            tau,
            beta: Spin::Minus,
            theta,
            rho: m0,
            alpha: Spin::Plus,
        };
        let (l, r) = rtt_terms(&cfg, &boundary);
        let total = |ts: &[RttTerm]| {
            ts.iter()
                .fold(RationalFunction::zero(2, n), |acc, t| acc + t.3.clone())
                .simplified()
        };
        let lhs_total = total(&l);
        let rhs_total = total(&r);
        let equal = rational_eq(&lhs_total, &rhs_total)?;
        out.push(Case10Table {
            name: name.into(),
            n,
            k,
            boundary,
            lhs: rows(l),
            rhs: rows(r),
            lhs_total,
            rhs_total,
            equal,
        });
    }
    Ok(out)
}
