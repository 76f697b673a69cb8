use std::fmt;

use serde::Serialize;

use super::spin::Spin;
use super::state::IceState;
use super::system::IceSystem;
use super::weights::{VertexType, WeightTable};
use super::{enumerate_states, state_weight};
use crate::error::{invalid, Result};

/// A strict Gelfand-Tsetlin pattern: row `k` has one entry fewer than row `k-1`,
/// rows are strictly decreasing and consecutive rows interleave.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return invalid("pattern has no rows");
        };
        let r = first.len();
        if rows.len() != r {
            return invalid(format!("pattern with top row of length {r} needs {r} rows"));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != r - k {
                return invalid(format!("row {k} should have {} entries", r - k));
            }
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return invalid(format!("row {k} is not strictly decreasing"));
            }
        }
        for k in 1..r {
            let (x, y) = (&rows[k - 1], &rows[k]);
            for j in 0..y.len() {
                if !(x[j] >= y[j] && y[j] >= x[j + 1]) {
                    return invalid(format!("rows {} and {k} do not interleave", k - 1));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn top(&self) -> &[i64] {
        &self.rows[0]
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        write!(f, "{{{}}}", rows.join(","))
    }
}

/// Row `k` lists the columns carrying `-` on the vertical edges above row `k`.
pub fn state_to_gt(state: &IceState) -> Result<GTPattern> {
    let ncols = state.ncols();
    let rows = state.vertical()[..state.nrows()]
        .iter()
        .map(|row| {
            (0..ncols)
                .filter(|&p| !row[p].is_plus())
                .map(|p| (ncols - 1 - p) as i64)
                .collect()
        })
        .collect();
    GTPattern::new(rows)
}

pub fn gt_to_state(pattern: &GTPattern, sys: &IceSystem) -> Result<IceState> {
    let (r, ncols) = (sys.r, sys.ncols);
    if pattern.rows.len() != r {
        return invalid(format!("pattern has {} rows, system has {r}", pattern.rows.len()));
    }
    let mut vertical = Vec::with_capacity(r + 1);
    for row in &pattern.rows {
        let mut spins = vec![Spin::Plus; ncols];
        for &c in row {
            if c < 0 || c >= ncols as i64 {
                return invalid(format!("column {c} outside 0..{ncols}"));
            }
            spins[ncols - 1 - c as usize] = Spin::Minus;
        }
        vertical.push(spins);
    }
    vertical.push(vec![Spin::Plus; ncols]);
    let mut horizontal = Vec::with_capacity(r);
    for i in 0..r {
        let mut h = vec![Spin::Minus; ncols + 1];
        for p in (0..ncols).rev() {
            let bit = h[p + 1].bit() + vertical[i + 1][p].bit() - vertical[i][p].bit();
            h[p] = Spin::from_bit(bit).ok_or_else(|| crate::Error::InvalidInput(format!("row {i} is inadmissible")))?;
        }
        horizontal.push(h);
    }
    let state = IceState::from_spins(vertical, horizontal)?;
    state.check(sys)?;
    Ok(state)
}

/// Differences of consecutive row sums (the last row is followed by an empty row).
pub fn gt_weight_vector(pattern: &GTPattern) -> Vec<i64> {
    let sums: Vec<i64> = pattern.rows.iter().map(|r| r.iter().sum()).collect();
    (0..sums.len())
        .map(|k| sums[k] - sums.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// All strict patterns with the given top row, in lexicographic order.
pub fn enumerate_gt(top: &[i64]) -> Result<Vec<GTPattern>> {
    if top.windows(2).any(|w| w[0] <= w[1]) {
        return invalid("top row must be strictly decreasing");
    }
    let mut out = Vec::new();
    let mut rows = vec![top.to_vec()];
    extend_gt(&mut rows, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

fn extend_gt(rows: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, out: &mut Vec<GTPattern>) {
    let prev = rows.last().expect("non-empty").clone();
    if prev.len() == 1 {
        out.push(GTPattern { rows: rows.clone() });
        return;
    }
    let j = cur.len();
    if j + 1 == prev.len() {
        rows.push(cur.clone());
        extend_gt(rows, &mut Vec::new(), out);
        rows.pop();
        return;
    }
    let hi = match cur.last() {
        Some(&y) => prev[j].min(y - 1),
        None => prev[j],
    };
    for y in (prev[j + 1]..=hi).rev() {
        cur.push(y);
        extend_gt(rows, cur, out);
        cur.pop();
    }
}

/// The states with no `c1` vertex, keyed by the permutation `w` with
/// `exponent[i] = (lambda + rho)[w[i]]`.
pub fn stable_states(sys: &IceSystem) -> Result<Vec<(Vec<usize>, IceState)>> {
    let top = sys.top_minus_columns();
    let table = WeightTable::gamma(sys.n);
    let mut out = Vec::new();
    for state in enumerate_states(sys) {
        if state.count_vertices(VertexType::C1) > 0 {
            continue;
        }
        let w = state_weight(&state, &table);
        let Some((exps, _)) = w.as_monomial() else {
            return invalid("stable state with vanishing weight");
        };
        let mut perm = Vec::with_capacity(exps.len());
        for e in exps {
            match top.iter().position(|t| t == e) {
                Some(k) if !perm.contains(&k) => perm.push(k),
                _ => return invalid("stable weight is not a permutation of the top row"),
            }
        }
        out.push((perm, state));
    }
    out.sort();
    Ok(out)
}
