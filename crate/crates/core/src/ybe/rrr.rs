use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Failure, YbeReport};
use crate::coeffring::{rational_eq, RationalFunction};
use crate::error::Result;
use crate::lattice::DecoratedSpin;
use crate::rmatrix::{labels, RTable, Vars};

type Triple = [DecoratedSpin; 3];
type Vector = BTreeMap<Triple, RationalFunction>;

/// Applies the R-matrix acting on tensor slots `i, j` with parameters `(z_i, z_j)`.
fn apply(table: &RTable, vec: &Vector, i: usize, j: usize) -> Vector {
    let vars = Vars::new(3, i, j).expect("distinct slots");
    let mut out: Vector = BTreeMap::new();
    for (k, c) in vec {
        for (g, d, w) in table.outputs(k[i], k[j], &vars) {
            let mut key = *k;
            key[i] = g;
            key[j] = d;
            let term = c * &w;
            match out.get_mut(&key) {
                Some(acc) => *acc = &*acc + &term,
                None => {
                    out.insert(key, term);
                }
            }
        }
    }
    out
}

fn triple_name(t: &Triple) -> String {
    t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `R23 R13 R12 = R12 R13 R23` on every basis vector of `V(z1) ⊗ V(z2) ⊗ V(z3)`.
pub fn rrr_check(table: &RTable) -> Result<YbeReport> {
    let n = table.n;
    let ls = labels(n);
    let mut basis = Vec::new();
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                basis.push([a, b, c]);
            }
        }
    }
    let results: Vec<Result<Vec<Option<Failure>>>> = basis
        .par_iter()
        .map(|k| {
            let start: Vector = [(*k, RationalFunction::one(3, n))].into_iter().collect();
            let lhs = apply(table, &apply(table, &apply(table, &start, 0, 1), 0, 2), 1, 2);
            let rhs = apply(table, &apply(table, &apply(table, &start, 1, 2), 0, 2), 0, 1);
            let keys: std::collections::BTreeSet<&Triple> = lhs.keys().chain(rhs.keys()).collect();
            let zero = RationalFunction::zero(3, n);
            let mut fails = Vec::new();
            for key in keys {
                let l = lhs.get(key).unwrap_or(&zero);
                let r = rhs.get(key).unwrap_or(&zero);
                fails.push((!rational_eq(l, r)?).then(|| Failure {
                    boundary: format!("{} -> {}", triple_name(k), triple_name(key)),
                    lhs: l.simplified(),
                    rhs: r.simplified(),
                }));
            }
            Ok(fails)
        })
        .collect();
    let mut report = YbeReport::new("rrr", "braid Yang-Baxter equation for the R-vertex", n, &table.label());
    for r in results {
        for f in r? {
            report.record(f);
        }
    }
    Ok(report)
}

fn unitarity_impl(n: u32, normalized: bool) -> Result<YbeReport> {
    let table = RTable::gamma(n);
    let fwd = Vars::pair();
    let back = fwd.swapped();
    let a21 = RationalFunction::from_poly(back.a2_entry(n));
    let a12 = RationalFunction::from_poly(fwd.a2_entry(n));
    let ls = labels(n);
    let mut report = YbeReport::new(
        if normalized {
            "unitarity-normalized"
        } else {
            "unitarity"
        },
        "R(z2,z1) composed with R(z1,z2) is a scalar",
        n,
        "gamma-r",
    );
    for &alpha in &ls {
        for &beta in &ls {
            for &gamma in &ls {
                for &delta in &ls {
                    let mut lhs = RationalFunction::zero(2, n);
                    for (x, y, w1) in table.outputs(alpha, beta, &back) {
                        let w2 = table.weight(y, x, delta, gamma, &fwd);
                        if !w2.is_zero() {
                            lhs = lhs + w1 * w2;
                        }
                    }
                    let identity = alpha == gamma && beta == delta;
                    let rhs = match (identity, normalized) {
                        (false, _) => RationalFunction::zero(2, n),
                        (true, false) => a12.clone() * a21.clone(),
                        (true, true) => RationalFunction::one(2, n),
                    };
                    if normalized {
                        lhs = lhs.checked_div(&(a12.clone() * a21.clone()))?;
                    }
                    let ok = rational_eq(&lhs, &rhs)?;
                    report.record((!ok).then(|| Failure {
                        boundary: format!("{alpha},{beta},{gamma},{delta}"),
                        lhs: lhs.simplified(),
                        rhs: rhs.simplified(),
                    }));
                }
            }
        }
    }
    Ok(report)
}

/// `Σ R_{z2,z1}(alpha,beta,x,y) R_{z1,z2}(y,x,delta,gamma) = (z1^n - v z2^n)(z2^n - v z1^n) [alpha=gamma][beta=delta]`.
pub fn unitarity_check(n: u32) -> Result<YbeReport> {
    unitarity_impl(n, false)
}

/// The same identity after dividing each R-matrix by its all-minus entry: the product is the identity.
pub fn unitarity_normalized_check(n: u32) -> Result<YbeReport> {
    unitarity_impl(n, true)
}
