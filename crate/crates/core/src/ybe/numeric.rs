use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::rtt::{rtt_boundaries, RttConfig};
use crate::coeffring::{Evaluate, NumericBackend};
use crate::error::{invalid, Error, Result};
use crate::lattice::{DecoratedSpin, Spin, Variant};
use crate::rmatrix::{labels, ChargeMode, RTable, Vars};

/// Which identity the numeric oracle samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NumericSuite {
    Rtt,
    Rrr,
    Unitarity,
}

impl FromStr for NumericSuite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rtt" => Ok(Self::Rtt),
            "rrr" => Ok(Self::Rrr),
            "unitarity" => Ok(Self::Unitarity),
            _ => invalid(format!("unknown numeric suite {s:?}")),
        }
    }
}

impl fmt::Display for NumericSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Rtt => "rtt",
            Self::Rrr => "rrr",
            Self::Unitarity => "unitarity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericReport {
    pub suite: NumericSuite,
    pub n: u32,
    pub p: u64,
    pub seed: u64,
    pub checked: usize,
    /// Largest `|lhs - rhs| / max(1, |lhs|, |rhs|)`.
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

pub const NUMERIC_TOLERANCE: f64 = 1e-6;

/// Random spectral parameters with modulus in `[0.5, 1.5]`.
fn random_z<R: Rng>(rng: &mut R, k: usize) -> Vec<Complex64> {
    (0..k)
        .map(|_| {
            let r = rng.random_range(0.5..1.5);
            let t = rng.random_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(r, t)
        })
        .collect()
}

fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}

fn sample<T: Clone, R: Rng>(rng: &mut R, items: &[T], fraction: f64) -> Vec<T> {
    let k = ((items.len() as f64 * fraction).ceil() as usize).clamp(1, items.len().max(1));
    let mut v = items.to_vec();
    v.shuffle(rng);
    v.truncate(k);
    v
}

/// Evaluates a random `fraction` of the cases of `suite` numerically, every
/// vertex weight separately, and combines them in complex arithmetic.
pub fn numeric_sample(
    suite: NumericSuite,
    n: u32,
    backend: &NumericBackend,
    seed: u64,
    fraction: f64,
) -> Result<NumericReport> {
    if backend.n != n {
        return invalid(format!("backend built for n = {}, asked for n = {n}", backend.n));
    }
    if !(fraction > 0.0 && fraction <= 1.0) {
        return invalid(format!("sample fraction {fraction} outside (0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (checked, max_error) = match suite {
        NumericSuite::Rtt => rtt_numeric(n, backend, &mut rng, fraction)?,
        NumericSuite::Rrr => rrr_numeric(n, backend, &mut rng, fraction)?,
        NumericSuite::Unitarity => unitarity_numeric(n, backend, &mut rng, fraction)?,
    };
    Ok(NumericReport {
        suite,
        n,
        p: backend.p,
        seed,
        checked,
        max_error,
        tolerance: NUMERIC_TOLERANCE,
        pass: max_error < NUMERIC_TOLERANCE,
    })
}

fn rtt_numeric(n: u32, backend: &NumericBackend, rng: &mut ChaCha8Rng, fraction: f64) -> Result<(usize, f64)> {
    let mut worst = 0f64;
    let mut checked = 0;
    for variant in [Variant::Gamma, Variant::Modified] {
        let cfg = RttConfig::new(n, variant);
        let rows = cfg.rows();
        let r = cfg.r_table();
        let vars = Vars::pair();
        let be = backend.clone().with_z(random_z(rng, 2));
        let row = |l, t, rt, bt, i| rows.local_weight(l, t, rt, bt, i, 2).evaluate(&be);
        let all = rtt_boundaries(n, cfg.lifts);
        for b in sample(rng, &all, fraction) {
            let mut lhs = Complex64::new(0.0, 0.0);
            for (nu, mu, w) in r.outputs(b.sigma, b.tau, &vars) {
                let w = w.evaluate(&be)?;
                for gamma in Spin::BOTH {
                    lhs += w * row(nu, b.beta, b.theta, gamma, 0)? * row(mu, gamma, b.rho, b.alpha, 1)?;
                }
            }
            let mut rhs = Complex64::new(0.0, 0.0);
            let mut ins = vec![(b.theta, b.rho)];
            if b.theta != b.rho {
                ins.push((b.rho, b.theta));
            }
            for (phi, psi) in ins {
                let w = r.weight(phi, psi, b.theta, b.rho, &vars).evaluate(&be)?;
                for delta in Spin::BOTH {
                    rhs += row(b.sigma, delta, phi, b.alpha, 0)? * row(b.tau, b.beta, psi, delta, 1)? * w;
                }
            }
            worst = worst.max(rel_err(lhs, rhs));
            checked += 1;
        }
    }
    Ok((checked, worst))
}

type Triple = [DecoratedSpin; 3];

fn apply_numeric(
    table: &RTable,
    be: &NumericBackend,
    vec: &HashMap<Triple, Complex64>,
    i: usize,
    j: usize,
) -> Result<HashMap<Triple, Complex64>> {
    let vars = Vars::new(3, i, j)?;
    let mut out: HashMap<Triple, Complex64> = HashMap::new();
    for (k, c) in vec {
        for (g, d, w) in table.outputs(k[i], k[j], &vars) {
            let mut key = *k;
            key[i] = g;
            key[j] = d;
            *out.entry(key).or_default() += c * w.evaluate(be)?;
        }
    }
    Ok(out)
}

fn rrr_numeric(n: u32, backend: &NumericBackend, rng: &mut ChaCha8Rng, fraction: f64) -> Result<(usize, f64)> {
    let ls = labels(n);
    let mut basis = Vec::new();
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                basis.push([a, b, c]);
            }
        }
    }
    let mut worst = 0f64;
    let mut checked = 0;
    for table in [RTable::gamma(n), RTable::rhat(n)] {
        let table = table.with_mode(ChargeMode::Residue);
        let be = backend.clone().with_z(random_z(rng, 3));
        for k in sample(rng, &basis, fraction) {
            let start: HashMap<Triple, Complex64> = [(k, Complex64::new(1.0, 0.0))].into_iter().collect();
            let l = apply_numeric(&table, &be, &start, 0, 1)?;
            let l = apply_numeric(&table, &be, &l, 0, 2)?;
            let l = apply_numeric(&table, &be, &l, 1, 2)?;
            let r = apply_numeric(&table, &be, &start, 1, 2)?;
            let r = apply_numeric(&table, &be, &r, 0, 2)?;
            let r = apply_numeric(&table, &be, &r, 0, 1)?;
            for key in l.keys().chain(r.keys()) {
                let a = l.get(key).copied().unwrap_or_default();
                let b = r.get(key).copied().unwrap_or_default();
                worst = worst.max(rel_err(a, b));
            }
            checked += 1;
        }
    }
    Ok((checked, worst))
}

fn unitarity_numeric(n: u32, backend: &NumericBackend, rng: &mut ChaCha8Rng, fraction: f64) -> Result<(usize, f64)> {
    let table = RTable::gamma(n);
    let fwd = Vars::pair();
    let back = fwd.swapped();
    let be = backend.clone().with_z(random_z(rng, 2));
    let scalar = fwd.a2_entry(n).evaluate(&be)? * back.a2_entry(n).evaluate(&be)?;
    let ls = labels(n);
    let mut quads = Vec::new();
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                for &d in &ls {
                    quads.push([a, b, c, d]);
                }
            }
        }
    }
    let mut worst = 0f64;
    let mut checked = 0;
    for [alpha, beta, gamma, delta] in sample(rng, &quads, fraction) {
        let mut lhs = Complex64::new(0.0, 0.0);
        for &x in &ls {
            for &y in &ls {
                lhs += table.weight(alpha, beta, x, y, &back).evaluate(&be)?
                    * table.weight(y, x, delta, gamma, &fwd).evaluate(&be)?;
            }
        }
        let rhs = if alpha == gamma && beta == delta {
            scalar
        } else {
            Complex64::new(0.0, 0.0)
        };
        worst = worst.max(rel_err(lhs, rhs));
        checked += 1;
    }
    Ok((checked, worst))
}
