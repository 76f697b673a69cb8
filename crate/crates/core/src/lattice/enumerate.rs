use std::str::FromStr;

use serde::Serialize;

use super::spin::Spin;
use super::state::IceState;
use super::system::IceSystem;
use crate::error::Error;

/// State enumeration strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Vertex-by-vertex depth-first search, column by column.
    Dfs,
    /// Row-by-row: choose the spins below a row, the horizontal spins then follow.
    Rows,
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dfs" => Ok(Engine::Dfs),
            "rows" => Ok(Engine::Rows),
            _ => Err(Error::InvalidInput(format!("unknown engine {s:?}"))),
        }
    }
}

/// Restriction on the left-edge charges of each row.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChargeFilter {
    /// `None` leaves the row unconstrained.
    pub charges: Vec<Option<i64>>,
    /// Compare modulo this value instead of exactly.
    pub modulus: Option<u32>,
}

impl ChargeFilter {
    pub fn exact(charges: &[i64]) -> Self {
        Self {
            charges: charges.iter().map(|&c| Some(c)).collect(),
            modulus: None,
        }
    }

    pub fn residues(charges: &[i64], n: u32) -> Self {
        Self {
            charges: charges.iter().map(|&c| Some(c)).collect(),
            modulus: Some(n),
        }
    }

    pub fn accepts(&self, row: usize, charge: i64) -> bool {
        match self.charges.get(row).copied().flatten() {
            None => true,
            Some(c) => match self.modulus {
                None => c == charge,
                Some(n) => (c - charge).rem_euclid(n as i64) == 0,
            },
        }
    }
}

/// Options for [`enumerate_states_with`].
#[derive(Debug, Clone, Default)]
pub struct EnumOptions {
    pub filter: Option<ChargeFilter>,
    /// Drop states that are not `n`-admissible (they have zero Gamma weight anyway).
    pub n_admissible_only: bool,
}

/// All admissible states of the system, sorted, using the DFS engine.
pub fn enumerate_states(sys: &IceSystem) -> Vec<IceState> {
    enumerate_states_with(sys, Engine::Dfs, &EnumOptions::default())
}

pub fn enumerate_states_with(sys: &IceSystem, engine: Engine, opts: &EnumOptions) -> Vec<IceState> {
    let raw = match engine {
        Engine::Dfs => dfs(sys),
        Engine::Rows => rows(sys, opts.filter.as_ref()),
    };
    let mut out: Vec<IceState> = raw
        .into_iter()
        .map(|(v, h)| IceState::from_spins(v, h).expect("well-formed grid"))
        .filter(|s| sys.left().iter().zip(s.left_edges()).all(|(b, e)| b.accepts(e)))
        .filter(|s| {
            opts.filter
                .as_ref()
                .is_none_or(|f| s.left_charges().iter().enumerate().all(|(i, &c)| f.accepts(i, c)))
        })
        .filter(|s| !opts.n_admissible_only || s.is_n_admissible(sys.n))
        .collect();
    out.sort();
    out
}

type Grid = (Vec<Vec<Spin>>, Vec<Vec<Spin>>);

struct Dfs<'a> {
    sys: &'a IceSystem,
    v: Vec<Vec<Spin>>,
    h: Vec<Vec<Spin>>,
    out: Vec<Grid>,
}

impl Dfs<'_> {
    fn step(&mut self, p: usize, i: usize) {
        let (r, ncols) = (self.sys.r, self.sys.ncols);
        if p == ncols {
            self.out.push((self.v.clone(), self.h.clone()));
            return;
        }
        let (l, t) = (self.h[i][p].bit(), self.v[i][p].bit());
        for right in Spin::BOTH {
            let Some(bottom) = Spin::from_bit(l + t - right.bit()) else {
                continue;
            };
            if i + 1 == r && !bottom.is_plus() {
                continue;
            }
            if p + 1 == ncols && right.is_plus() {
                continue;
            }
            self.h[i][p + 1] = right;
            self.v[i + 1][p] = bottom;
            if i + 1 == r {
                self.step(p + 1, 0);
            } else {
                self.step(p, i + 1);
            }
        }
    }

    fn start(&mut self, row: usize) {
        if row == self.sys.r {
            self.step(0, 0);
            return;
        }
        for &s in self.sys.left()[row].spins() {
            self.h[row][0] = s;
            self.start(row + 1);
        }
    }
}

fn dfs(sys: &IceSystem) -> Vec<Grid> {
    let (r, ncols) = (sys.r, sys.ncols);
    let mut v = vec![vec![Spin::Plus; ncols]; r + 1];
    v[0] = sys.top().to_vec();
    let mut d = Dfs {
        sys,
        v,
        h: vec![vec![Spin::Minus; ncols + 1]; r],
        out: Vec::new(),
    };
    d.start(0);
    d.out
}

/// Horizontal spins of a row given the spins above and below it, or `None`
/// if the row is inadmissible or does not end in `-`.
fn propagate(left: Spin, top: &[Spin], bottom: &[Spin]) -> Option<Vec<Spin>> {
    let mut h = Vec::with_capacity(top.len() + 1);
    h.push(left);
    for (t, b) in top.iter().zip(bottom) {
        let next = Spin::from_bit(h.last()?.bit() + t.bit() - b.bit())?;
        h.push(next);
    }
    (!h.last()?.is_plus()).then_some(h)
}

fn subsets(ncols: usize, k: usize, cur: &mut Vec<Spin>, out: &mut Vec<Vec<Spin>>) {
    let placed = cur.iter().filter(|s| s.is_plus()).count();
    if cur.len() == ncols {
        if placed == k {
            out.push(cur.clone());
        }
        return;
    }
    let remaining = ncols - cur.len();
    for s in Spin::BOTH {
        let np = placed + s.is_plus() as usize;
        if np > k || np + remaining - 1 < k {
            continue;
        }
        cur.push(s);
        subsets(ncols, k, cur, out);
        cur.pop();
    }
}

fn rows(sys: &IceSystem, filter: Option<&ChargeFilter>) -> Vec<Grid> {
    let (r, ncols) = (sys.r, sys.ncols);
    let mut out = Vec::new();
    let mut v = vec![sys.top().to_vec()];
    let mut h = Vec::new();
    rows_rec(sys, filter, 0, &mut v, &mut h, &mut out);
    debug_assert!(out
        .iter()
        .all(|(v, h)| v.len() == r + 1 && h.iter().all(|x| x.len() == ncols + 1)));
    out
}

fn rows_rec(
    sys: &IceSystem,
    filter: Option<&ChargeFilter>,
    i: usize,
    v: &mut Vec<Vec<Spin>>,
    h: &mut Vec<Vec<Spin>>,
    out: &mut Vec<Grid>,
) {
    if i == sys.r {
        out.push((v.clone(), h.clone()));
        return;
    }
    let top = v[i].clone();
    let top_plus = top.iter().filter(|s| s.is_plus()).count();
    for &left in sys.left()[i].spins() {
        // Conservation across the row: plus count below = above + [left is +].
        let k = top_plus + left.is_plus() as usize;
        if k > sys.ncols {
            continue;
        }
        let candidates = if i + 1 == sys.r {
            if k == sys.ncols {
                vec![vec![Spin::Plus; sys.ncols]]
            } else {
                vec![]
            }
        } else {
            let mut c = Vec::new();
            subsets(sys.ncols, k, &mut Vec::new(), &mut c);
            c
        };
        for bottom in candidates {
            let Some(row) = propagate(left, &top, &bottom) else {
                continue;
            };
            let charge = row.iter().filter(|s| s.is_plus()).count() as i64;
            if filter.is_some_and(|f| !f.accepts(i, charge)) {
                continue;
            }
            v.push(bottom);
            h.push(row);
            rows_rec(sys, filter, i + 1, v, h, out);
            v.pop();
            h.pop();
        }
    }
}
