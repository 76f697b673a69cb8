use serde::Serialize;

use super::charge_vectors;
use super::whittaker::whittaker_system;
use crate::coeffring::{rational_eq, RationalFunction};
use crate::error::{invalid, Result};
use crate::lattice::{
    build_system, enumerate_states_with, partition_by_charge, state_weight, ChargeFilter, DecoratedSpin, Engine,
    EnumOptions, LeftBoundary, Partition, Variant, WeightTable,
};
use crate::rmatrix::{RTable, Vars};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatteringCase {
    pub c: Vec<i64>,
    /// R-vertex glued on the left of rows `i, i+1`.
    pub glued: RationalFunction,
    /// Plain partition function with `z_i` and `z_{i+1}` interchanged.
    pub swapped: RationalFunction,
    /// Combination of the two charge-restricted partition functions.
    pub combination: RationalFunction,
    pub glued_eq_swapped: bool,
    pub swapped_eq_combination: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatteringReport {
    pub claim: &'static str,
    pub lambda: Vec<i64>,
    pub r: usize,
    pub n: u32,
    pub i: usize,
    pub cases: Vec<ScatteringCase>,
    pub pass: bool,
}

/// Checks, for every `c` in `[0, n)^r`, that the three sides of the scattering
/// identity at the simple reflection `s_i` (1-based) agree.
pub fn scattering_identity_check(lambda: &Partition, r: usize, n: u32, i: usize) -> Result<ScatteringReport> {
    if i == 0 || i >= r {
        return invalid(format!("simple root index {i} outside 1..{r}"));
    }
    let (up, down) = (i - 1, i);
    let ncols = (lambda.first() + r as i64) as usize;
    let mut left = vec![LeftBoundary::Free; r];
    left[up] = LeftBoundary::Any;
    left[down] = LeftBoundary::Any;
    let glued_sys = build_system(lambda, r, n, ncols, left, Variant::Modified)?;
    let plain_sys = whittaker_system(lambda, r, n, Variant::Modified)?;
    let rows = WeightTable::modified(n);
    let rhat = RTable::rhat(n);
    let vars = Vars::new(r, up, down)?;
    let mut swap: Vec<usize> = (0..r).collect();
    swap.swap(up, down);
    let p = DecoratedSpin::plus;

    let mut cases = Vec::new();
    for c in charge_vectors(n, r) {
        let (ci, cj) = (c[up], c[down]);

        let mut charges: Vec<Option<i64>> = c.iter().copied().map(Some).collect();
        charges[up] = None;
        charges[down] = None;
        let opts = EnumOptions {
            filter: Some(ChargeFilter {
                charges,
                modulus: Some(n),
            }),
            n_admissible_only: false,
        };
        let mut glued = RationalFunction::zero(r, n);
        for s in enumerate_states_with(&glued_sys, Engine::Dfs, &opts) {
            let edges = s.left_edges();
            let w = rhat.weight(p(cj), p(ci), edges[up], edges[down], &vars);
            if w.is_zero() {
                continue;
            }
            glued = glued + w.mul_poly(&state_weight(&s, &rows));
        }

        let z_c = partition_by_charge(&plain_sys, &rows, &c)?;
        let swapped = RationalFunction::from_poly(z_c.substitute(&swap)?);

        let combination = if ci == cj {
            rhat.weight(p(ci), p(ci), p(ci), p(ci), &vars).mul_poly(&z_c)
        } else {
            let mut sc = c.clone();
            sc.swap(up, down);
            let z_sc = partition_by_charge(&plain_sys, &rows, &sc)?;
            rhat.weight(p(cj), p(ci), p(ci), p(cj), &vars).mul_poly(&z_c)
                + rhat.weight(p(cj), p(ci), p(cj), p(ci), &vars).mul_poly(&z_sc)
        };

        let glued_eq_swapped = rational_eq(&glued, &swapped)?;
        let swapped_eq_combination = rational_eq(&swapped, &combination)?;
        cases.push(ScatteringCase {
            c,
            glued: glued.simplified(),
            swapped,
            combination: combination.simplified(),
            glued_eq_swapped,
            swapped_eq_combination,
        });
    }
    let pass = cases.iter().all(|k| k.glued_eq_swapped && k.swapped_eq_combination);
    Ok(ScatteringReport {
        claim: "fundamental scattering identity as an identity of partition functions",
        lambda: lambda.padded(r)?,
        r,
        n,
        i,
        cases,
        pass,
    })
}
