use serde::Serialize;

use super::spin::{DecoratedSpin, Spin};
use super::system::IceSystem;
use super::weights::{VertexType, WeightTable};
use crate::coeffring::{CoeffElement, LaurentPoly};
use crate::error::{invalid, Result};

/// An assignment of spins to every edge of a system.
///
/// `vertical[k][p]` is the edge above row `k` in position `p` (`k = 0..=r`),
/// `horizontal[i][p]` the edge to the left of vertex `p` in row `i`
/// (`p = 0..=N`, so `horizontal[i][N]` is the right boundary).
///
/// The derived ordering is lexicographic on the vertical grid read row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IceState {
    vertical: Vec<Vec<Spin>>,
    horizontal: Vec<Vec<DecoratedSpin>>,
}

/// Decorates a row of horizontal spins with charges (number of `+` at or to the right).
pub(crate) fn decorate_row(spins: &[Spin]) -> Vec<DecoratedSpin> {
    let mut out = vec![DecoratedSpin::minus0(); spins.len()];
    let mut charge = 0;
    for p in (0..spins.len()).rev() {
        charge += spins[p].bit();
        out[p] = DecoratedSpin { spin: spins[p], charge };
    }
    out
}

impl IceState {
    /// Builds a state from bare spins, deriving all charges.
    pub fn from_spins(vertical: Vec<Vec<Spin>>, horizontal: Vec<Vec<Spin>>) -> Result<Self> {
        let r = horizontal.len();
        if vertical.len() != r + 1 {
            return invalid(format!("expected {} vertical rows, got {}", r + 1, vertical.len()));
        }
        let ncols = vertical.first().map_or(0, Vec::len);
        if vertical.iter().any(|row| row.len() != ncols) {
            return invalid("vertical rows have unequal lengths");
        }
        if horizontal.iter().any(|row| row.len() != ncols + 1) {
            return invalid(format!("horizontal rows must have {} edges", ncols + 1));
        }
        Ok(Self {
            vertical,
            horizontal: horizontal.iter().map(|row| decorate_row(row)).collect(),
        })
    }

    pub fn vertical(&self) -> &[Vec<Spin>] {
        &self.vertical
    }

    pub fn horizontal(&self) -> &[Vec<DecoratedSpin>] {
        &self.horizontal
    }

    pub fn nrows(&self) -> usize {
        self.horizontal.len()
    }

    pub fn ncols(&self) -> usize {
        self.vertical[0].len()
    }

    pub fn vertex(&self, i: usize, p: usize) -> Option<VertexType> {
        VertexType::classify(
            self.horizontal[i][p].spin,
            self.vertical[i][p],
            self.horizontal[i][p + 1].spin,
            self.vertical[i + 1][p],
        )
    }

    /// Charge of the vertex: the charge of the edge to its right.
    pub fn vertex_charge(&self, i: usize, p: usize) -> i64 {
        self.horizontal[i][p + 1].charge
    }

    pub fn left_edges(&self) -> Vec<DecoratedSpin> {
        self.horizontal.iter().map(|row| row[0]).collect()
    }

    pub fn left_charges(&self) -> Vec<i64> {
        self.horizontal.iter().map(|row| row[0].charge).collect()
    }

    /// Every `-` horizontal edge carries a charge divisible by `n`.
    pub fn is_n_admissible(&self, n: u32) -> bool {
        self.horizontal
            .iter()
            .flatten()
            .all(|e| e.is_plus() || e.residue(n) == 0)
    }

    pub fn count_vertices(&self, vt: VertexType) -> usize {
        (0..self.nrows())
            .flat_map(|i| (0..self.ncols()).map(move |p| (i, p)))
            .filter(|&(i, p)| self.vertex(i, p) == Some(vt))
            .count()
    }

    /// Checks boundary conditions, vertex admissibility and charge bookkeeping.
    pub fn check(&self, sys: &IceSystem) -> Result<()> {
        let (r, ncols) = (sys.r, sys.ncols);
        if self.nrows() != r || self.ncols() != ncols {
            return invalid("state shape does not match the system");
        }
        if self.vertical[0] != sys.top() {
            return invalid("top boundary mismatch");
        }
        if self.vertical[r].iter().any(|s| !s.is_plus()) {
            return invalid("bottom boundary must be all '+'");
        }
        for i in 0..r {
            if self.horizontal[i][ncols] != DecoratedSpin::minus0() {
                return invalid(format!("row {i}: right boundary must be -0"));
            }
            if !sys.left()[i].accepts(self.horizontal[i][0]) {
                return invalid(format!("row {i}: left boundary mismatch"));
            }
            let spins: Vec<Spin> = self.horizontal[i].iter().map(|e| e.spin).collect();
            if decorate_row(&spins) != self.horizontal[i] {
                return invalid(format!("row {i}: charges inconsistent with spins"));
            }
            for p in 0..ncols {
                if self.vertex(i, p).is_none() {
                    return invalid(format!("vertex ({i},{p}) is not admissible"));
                }
            }
        }
        Ok(())
    }

    /// Grid of vertex types, row by row.
    pub fn vertex_types(&self) -> Vec<Vec<VertexType>> {
        (0..self.nrows())
            .map(|i| {
                (0..self.ncols())
                    .map(|p| self.vertex(i, p).expect("admissible state"))
                    .collect()
            })
            .collect()
    }
}

/// Product of the vertex weights of an admissible state.
pub fn state_weight(state: &IceState, table: &WeightTable) -> LaurentPoly {
    let r = state.nrows();
    let mut coeff = CoeffElement::one(table.n);
    let mut exps = vec![0i64; r];
    for (i, e) in exps.iter_mut().enumerate() {
        for p in 0..state.ncols() {
            let vt = state.vertex(i, p).expect("admissible state");
            let (c, x) = table.vertex_parts(vt, state.vertex_charge(i, p));
            if c.is_zero() {
                return LaurentPoly::zero(r, table.n);
            }
            coeff = coeff * c;
            *e += x;
        }
    }
    LaurentPoly::monomial(exps, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charges_count_plus_at_or_right() {
        use Spin::{Minus as M, Plus as P};
        let row = decorate_row(&[P, M, P, P, M]);
        let charges: Vec<i64> = row.iter().map(|e| e.charge).collect();
        assert_eq!(charges, vec![3, 2, 2, 1, 0]);
    }
}
