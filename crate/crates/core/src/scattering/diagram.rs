use serde::Serialize;

use super::charge_vectors;
use super::identity::scattering_identity_check;
use super::tau::{tau1, tau2, taumatch_check, WeightVector};
use crate::coeffring::{rational_eq, RationalFunction};
use crate::error::{invalid, Result};
use crate::lattice::{DecoratedSpin, Partition};
use crate::rmatrix::{RBase, RTable, Vars};

fn index(x: &[i64], n: u32) -> usize {
    x.iter().fold(0, |acc, &d| acc * n as usize + d as usize)
}

/// Tensor slots hold the charges in reverse row order: slot `s` carries `c_{r-s}`.
fn theta(c: &[i64]) -> Vec<i64> {
    c.iter().rev().copied().collect()
}

/// `I ⊗ .. ⊗ tau R ⊗ .. ⊗ I` on `V_+^{⊗ r}` (dimension `n^r`), with `R` the all-plus
/// block of the modified R-vertex in `(z_i, z_{i+1})` and `tau` the flip.
/// Row = output basis index, column = input.
pub fn intertwiner_matrix(n: u32, r: usize, i: usize) -> Result<Vec<Vec<RationalFunction>>> {
    if i == 0 || i >= r {
        return invalid(format!("simple root index {i} outside 1..{r}"));
    }
    let table = RTable::new(RBase::Intro, n);
    let vars = Vars::new(r, i - 1, i)?;
    let (f, g) = (r - i - 1, r - i);
    let dim = (n as usize).pow(r as u32);
    let mut m = vec![vec![RationalFunction::zero(r, n); dim]; dim];
    let p = DecoratedSpin::plus;
    for x in charge_vectors(n, r) {
        let col = index(&x, n);
        for (gamma, delta, w) in table.outputs(p(x[f]), p(x[g]), &vars) {
            let mut y = x.clone();
            y[f] = delta.charge.rem_euclid(n as i64);
            y[g] = gamma.charge.rem_euclid(n as i64);
            let row = index(&y, n);
            m[row][col] = &m[row][col] + &w;
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub claim: &'static str,
    pub n: u32,
    pub r: usize,
    pub i: usize,
    pub dim: usize,
    pub columns_checked: usize,
    pub mismatches: Vec<Vec<i64>>,
    /// The scattering constants match the R-vertex weights.
    pub taumatch_pass: bool,
    /// The scattering identity holds for `lambda = 0`.
    pub scattering_pass: bool,
    pub pass: bool,
}

/// Every column of [`intertwiner_matrix`] carries `tau1` on the diagonal and
/// `tau2` at the reflected charge vector (their sum when `c_i = c_{i+1}`).
pub fn intertwiner_check(n: u32, r: usize, i: usize) -> Result<DiagramReport> {
    let m = intertwiner_matrix(n, r, i)?;
    let dim = m.len();
    let mut mismatches = Vec::new();
    for c in charge_vectors(n, r) {
        let mu = WeightVector::from_charges(&c);
        let t1 = tau1(&mu, i, n)?;
        let t2 = tau2(&mu, i, n)?;
        let mut sc = c.clone();
        sc.swap(i - 1, i);
        let col = index(&theta(&c), n);
        let diag = index(&theta(&sc), n);
        let mut expected = vec![RationalFunction::zero(r, n); dim];
        if diag == col {
            expected[col] = t1 + t2;
        } else {
            expected[col] = t1;
            expected[diag] = t2;
        }
        let mut ok = true;
        for (row, e) in expected.iter().enumerate() {
            ok &= rational_eq(&m[row][col], e)?;
        }
        if !ok {
            mismatches.push(c);
        }
    }
    let taumatch_pass = taumatch_check(n)?.pass;
    let scattering_pass = scattering_identity_check(&Partition::new(vec![0; r])?, r, n, i)?.pass;
    Ok(DiagramReport {
        claim: "intertwiner on spherical Whittaker functions equals tau R",
        n,
        r,
        i,
        dim,
        columns_checked: (n as usize).pow(r as u32),
        pass: mismatches.is_empty() && taumatch_pass && scattering_pass,
        mismatches,
        taumatch_pass,
        scattering_pass,
    })
}
