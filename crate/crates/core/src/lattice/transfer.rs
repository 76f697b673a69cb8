use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use super::enumerate::{enumerate_states_with, ChargeFilter, Engine, EnumOptions};
use super::spin::{DecoratedSpin, Spin};
use super::state::state_weight;
use super::system::IceSystem;
use super::weights::{Variant, VertexType, WeightTable};
use crate::coeffring::LaurentPoly;
use crate::error::{invalid, Result};

/// How to evaluate a partition function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionEngine {
    /// Sum of state weights over the enumerated states.
    Enumerate,
    /// Row transfer with the charge carried along the scan.
    Transfer,
}

impl FromStr for PartitionEngine {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" | "enumerate" => Ok(PartitionEngine::Enumerate),
            "transfer" => Ok(PartitionEngine::Transfer),
            _ => invalid(format!("unknown engine {s:?}")),
        }
    }
}

fn bits(spins: &[Spin]) -> u64 {
    spins
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_plus())
        .fold(0, |acc, (p, _)| acc | 1 << p)
}

/// Partition function by row transfer.
///
/// Each row is scanned right to left carrying (spins below so far, spin of the
/// edge to the right, its charge); rows are glued along their vertical spins.
pub fn partition_transfer(sys: &IceSystem, table: &WeightTable, filter: Option<&ChargeFilter>) -> LaurentPoly {
    let (r, ncols, n) = (sys.r, sys.ncols, table.n);
    let mut cur: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
    cur.insert(bits(sys.top()), LaurentPoly::one(r, n));
    for i in 0..r {
        let mut next: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
        for (top, acc) in cur {
            let mut scan: BTreeMap<(u64, bool, i64), LaurentPoly> = BTreeMap::new();
            scan.insert((0, false, 0), LaurentPoly::one(r, n));
            for p in (0..ncols).rev() {
                let t = (top >> p & 1) as i64;
                let mut step: BTreeMap<(u64, bool, i64), LaurentPoly> = BTreeMap::new();
                for ((below, right_plus, charge), w) in &scan {
                    for b in [1i64, 0] {
                        if i + 1 == r && b == 0 {
                            continue;
                        }
                        let l = *right_plus as i64 + b - t;
                        let (Some(ls), Some(ts), Some(bs)) = (Spin::from_bit(l), Spin::from_bit(t), Spin::from_bit(b))
                        else {
                            continue;
                        };
                        let rs = if *right_plus { Spin::Plus } else { Spin::Minus };
                        let vt = VertexType::classify(ls, ts, rs, bs).expect("spin conserved");
                        let vw = table.vertex_weight(vt, *charge, i, r);
                        if vw.is_zero() {
                            continue;
                        }
                        let key = (below | (b as u64) << p, l == 1, charge + l);
                        let entry = step.entry(key).or_insert_with(|| LaurentPoly::zero(r, n));
                        *entry = &*entry + &(w * &vw);
                    }
                }
                scan = step;
            }
            for ((below, left_plus, charge), w) in scan {
                let edge = if left_plus {
                    DecoratedSpin::plus(charge)
                } else {
                    DecoratedSpin::minus(charge)
                };
                if !sys.left()[i].accepts(edge) || filter.is_some_and(|f| !f.accepts(i, charge)) {
                    continue;
                }
                let entry = next.entry(below).or_insert_with(|| LaurentPoly::zero(r, n));
                *entry = &*entry + &(&acc * &w);
            }
        }
        cur = next;
    }
    let full = if ncols == 64 { u64::MAX } else { (1u64 << ncols) - 1 };
    cur.remove(&full).unwrap_or_else(|| LaurentPoly::zero(r, n))
}

/// Partition function by summing state weights.
pub fn partition_enumerate(sys: &IceSystem, table: &WeightTable, filter: Option<&ChargeFilter>) -> LaurentPoly {
    let opts = EnumOptions {
        filter: filter.cloned(),
        n_admissible_only: false,
    };
    enumerate_states_with(sys, Engine::Rows, &opts)
        .iter()
        .fold(LaurentPoly::zero(sys.r, table.n), |acc, s| acc + state_weight(s, table))
}

/// Partition function with the system's own weight variant.
pub fn partition_function(sys: &IceSystem) -> LaurentPoly {
    partition_transfer(sys, &WeightTable::new(sys.variant, sys.n), None)
}

pub fn partition_function_with(
    sys: &IceSystem,
    table: &WeightTable,
    engine: PartitionEngine,
    filter: Option<&ChargeFilter>,
) -> LaurentPoly {
    match engine {
        PartitionEngine::Enumerate => partition_enumerate(sys, table, filter),
        PartitionEngine::Transfer => partition_transfer(sys, table, filter),
    }
}

/// Partition function over states with prescribed left-edge charges.
///
/// Gamma weights match charges exactly; Modified weights match them modulo `n`.
pub fn partition_by_charge(sys: &IceSystem, table: &WeightTable, charges: &[i64]) -> Result<LaurentPoly> {
    partition_by_charge_with(sys, table, charges, PartitionEngine::Transfer)
}

pub fn partition_by_charge_with(
    sys: &IceSystem,
    table: &WeightTable,
    charges: &[i64],
    engine: PartitionEngine,
) -> Result<LaurentPoly> {
    if charges.len() != sys.r {
        return Err(crate::Error::ArityMismatch(sys.r, charges.len()));
    }
    if charges.iter().any(|&c| c < 0) {
        return invalid("charges must be non-negative");
    }
    let filter = match table.variant {
        Variant::Gamma => ChargeFilter::exact(charges),
        Variant::Modified => ChargeFilter::residues(charges, table.n),
    };
    Ok(partition_function_with(sys, table, engine, Some(&filter)))
}
