use serde::Serialize;

use super::charge_vectors;
use crate::coeffring::{CoeffElement, LaurentPoly};
use crate::error::{invalid, Result};
use crate::lattice::{
    build_system, partition_by_charge_with, partition_function_with, IceSystem, LeftBoundary, Partition,
    PartitionEngine, Variant, WeightTable,
};

/// The system with `N = lambda_1 + r` columns and free left edges.
pub fn whittaker_system(lambda: &Partition, r: usize, n: u32, variant: Variant) -> Result<IceSystem> {
    let ncols = (lambda.first() + r as i64) as usize;
    build_system(lambda, r, n, ncols, vec![LeftBoundary::Free; r], variant)
}

/// `z_1^(lambda_1 + r - c_1) .. z_r^(lambda_1 + r - c_r) Z(z; c)` with modified weights.
pub fn whittaker_value(lambda: &Partition, c: &[i64], n: u32) -> Result<LaurentPoly> {
    whittaker_value_with(lambda, c, n, PartitionEngine::Transfer)
}

pub fn whittaker_value_with(lambda: &Partition, c: &[i64], n: u32, engine: PartitionEngine) -> Result<LaurentPoly> {
    if c.iter().any(|&x| !(0..n as i64).contains(&x)) {
        return invalid(format!("charges {c:?} must lie in [0, {n})"));
    }
    let r = c.len();
    let sys = whittaker_system(lambda, r, n, Variant::Modified)?;
    let z = partition_by_charge_with(&sys, &WeightTable::modified(n), c, engine)?;
    let top = lambda.first() + r as i64;
    let exps = c.iter().map(|&x| top - x).collect();
    Ok(z * LaurentPoly::monomial(exps, CoeffElement::one(n)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WhittakerEntry {
    pub c: Vec<i64>,
    pub value: LaurentPoly,
    /// Residues mod `n` shared by every exponent vector, if the value is nonzero.
    pub coset: Option<Vec<i64>>,
    /// The coset is `c mod n` (or the value is zero).
    pub coset_is_c: bool,
    /// The coset is `lambda_1 + r - c mod n` (or the value is zero).
    pub coset_is_complement: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WhittakerReport {
    pub lambda: Vec<i64>,
    pub r: usize,
    pub n: u32,
    pub entries: Vec<WhittakerEntry>,
    pub engines_agree: bool,
    /// The values summed over all `c` give the Gamma partition function.
    pub sum_matches_gamma: bool,
    pub coset_is_c: bool,
    pub coset_is_complement: bool,
}

/// Values for every `c` in `[0, n)^r`, with the coset and sum checks.
pub fn whittaker_report(lambda: &Partition, r: usize, n: u32) -> Result<WhittakerReport> {
    let top = lambda.first() + r as i64;
    let m = n as i64;
    let mut entries = Vec::new();
    let mut engines_agree = true;
    let mut sum = LaurentPoly::zero(r, n);
    for c in charge_vectors(n, r) {
        let value = whittaker_value_with(lambda, &c, n, PartitionEngine::Transfer)?;
        let other = whittaker_value_with(lambda, &c, n, PartitionEngine::Enumerate)?;
        engines_agree &= value == other;
        sum = &sum + &value;
        let coset = value.coset_mod(m);
        let is = |target: Vec<i64>| coset.as_ref().is_none_or(|k| *k == target);
        let coset_is_c = is(c.iter().map(|x| x.rem_euclid(m)).collect());
        let coset_is_complement = is(c.iter().map(|x| (top - x).rem_euclid(m)).collect());
        entries.push(WhittakerEntry {
            c,
            value,
            coset,
            coset_is_c,
            coset_is_complement,
        });
    }
    let gamma_sys = whittaker_system(lambda, r, n, Variant::Gamma)?;
    let gamma = partition_function_with(&gamma_sys, &WeightTable::gamma(n), PartitionEngine::Transfer, None);
    Ok(WhittakerReport {
        lambda: lambda.padded(r)?,
        r,
        n,
        engines_agree,
        sum_matches_gamma: sum == gamma,
        coset_is_c: entries.iter().all(|e| e.coset_is_c),
        coset_is_complement: entries.iter().all(|e| e.coset_is_complement),
        entries,
    })
}
