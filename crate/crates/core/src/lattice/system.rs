use std::fmt;

use serde::Serialize;

use super::spin::{DecoratedSpin, Spin};
use super::weights::Variant;
use crate::error::{invalid, Result};

/// A weakly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&x| x < 0) {
            return invalid("partition parts must be non-negative");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{parts:?} is not weakly decreasing"));
        }
        Ok(Self { parts })
    }

    /// Parses a comma-separated list such as `3,2,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<i64>, _> = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse())
            .collect();
        match parts {
            Ok(p) => Self::new(p),
            Err(_) => invalid(format!("cannot parse partition {s:?}")),
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn first(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `r`.
    pub fn padded(&self, r: usize) -> Result<Vec<i64>> {
        if self.parts.len() > r {
            return invalid(format!("partition has more than {r} parts"));
        }
        let mut p = self.parts.clone();
        p.resize(r, 0);
        Ok(p)
    }

    /// `lambda + rho` with `rho = (r-1, .., 1, 0)`.
    pub fn plus_rho(&self, r: usize) -> Result<Vec<i64>> {
        Ok(self
            .padded(r)?
            .into_iter()
            .enumerate()
            .map(|(i, x)| x + (r - 1 - i) as i64)
            .collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Left boundary condition of one row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LeftBoundary {
    /// Spin `+` with any charge.
    Free,
    /// Spin `+` with exactly this integer charge.
    FixedPlus(i64),
    /// Spin `-` (mixed systems).
    FixedMinus,
    /// Either spin; used when an R-vertex is glued onto the left edge.
    Any,
}

impl LeftBoundary {
    pub(crate) fn spins(self) -> &'static [Spin] {
        match self {
            LeftBoundary::Free | LeftBoundary::FixedPlus(_) => &[Spin::Plus],
            LeftBoundary::FixedMinus => &[Spin::Minus],
            LeftBoundary::Any => &Spin::BOTH,
        }
    }

    pub(crate) fn accepts(self, edge: DecoratedSpin) -> bool {
        match self {
            LeftBoundary::Free => edge.is_plus(),
            LeftBoundary::FixedPlus(a) => edge == DecoratedSpin::plus(a),
            LeftBoundary::FixedMinus => !edge.is_plus(),
            LeftBoundary::Any => true,
        }
    }
}

/// An `r x N` grid with `+` on the bottom, `-` (charge 0) on the right,
/// a prescribed top row and per-row left conditions.
///
/// Columns are labelled `N-1, .., 0` from left to right; internally grids are
/// indexed by position `p = 0..N` from the left, so label `= N - 1 - p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IceSystem {
    pub n: u32,
    pub r: usize,
    pub ncols: usize,
    pub lambda: Option<Partition>,
    pub variant: Variant,
    top: Vec<Spin>,
    left: Vec<LeftBoundary>,
}

/// Builds the system attached to `lambda` with `r` rows and `ncols` columns.
///
/// Requires `ncols >= lambda_1 + r` so that every entry of `lambda + rho` is a column.
pub fn build_system(
    lambda: &Partition,
    r: usize,
    n: u32,
    ncols: usize,
    left: Vec<LeftBoundary>,
    variant: Variant,
) -> Result<IceSystem> {
    if n == 0 || r == 0 {
        return invalid("n and r must be positive");
    }
    if left.len() != r {
        return invalid(format!("expected {r} left boundary entries, got {}", left.len()));
    }
    let lr = lambda.plus_rho(r)?;
    if (ncols as i64) < lambda.first() + r as i64 {
        return invalid(format!("{ncols} columns is too few for lambda = {lambda} with r = {r}"));
    }
    let mut sys = IceSystem::custom(n, r, ncols, &lr, left)?;
    sys.lambda = Some(lambda.clone());
    sys.variant = variant;
    Ok(sys)
}

impl IceSystem {
    /// The standard system with every row free and `N = lambda_1 + r + 1`.
    pub fn for_partition(lambda: &Partition, r: usize, n: u32) -> Result<Self> {
        let ncols = lambda.first() as usize + r + 1;
        build_system(lambda, r, n, ncols, vec![LeftBoundary::Free; r], Variant::Gamma)
    }

    /// A system with an explicit set of top `-` columns.
    pub fn custom(n: u32, r: usize, ncols: usize, top_minus_columns: &[i64], left: Vec<LeftBoundary>) -> Result<Self> {
        if left.len() != r {
            return invalid(format!("expected {r} left boundary entries, got {}", left.len()));
        }
        if ncols > 64 {
            return invalid("at most 64 columns are supported");
        }
        let mut top = vec![Spin::Plus; ncols];
        for &c in top_minus_columns {
            if c < 0 || c >= ncols as i64 {
                return invalid(format!("column {c} outside 0..{ncols}"));
            }
            let p = ncols - 1 - c as usize;
            if top[p] == Spin::Minus {
                return invalid(format!("column {c} listed twice"));
            }
            top[p] = Spin::Minus;
        }
        if !left.contains(&LeftBoundary::Any) {
            let plus_rows = left.iter().filter(|b| !matches!(b, LeftBoundary::FixedMinus)).count();
            if plus_rows != top_minus_columns.len() {
                return invalid(format!(
                    "{} top '-' spins cannot be absorbed by {plus_rows} rows with '+' on the left",
                    top_minus_columns.len()
                ));
            }
        }
        Ok(Self {
            n,
            r,
            ncols,
            lambda: None,
            variant: Variant::Gamma,
            top,
            left,
        })
    }

    /// Top spins by position from the left.
    pub fn top(&self) -> &[Spin] {
        &self.top
    }

    pub fn left(&self) -> &[LeftBoundary] {
        &self.left
    }

    pub fn with_left(&self, left: Vec<LeftBoundary>) -> Result<Self> {
        let mut s = Self::custom(self.n, self.r, self.ncols, &self.top_minus_columns(), left)?;
        s.lambda = self.lambda.clone();
        s.variant = self.variant;
        Ok(s)
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn column_label(&self, p: usize) -> i64 {
        (self.ncols - 1 - p) as i64
    }

    /// Column labels carrying `-` on the top boundary, decreasing.
    pub fn top_minus_columns(&self) -> Vec<i64> {
        (0..self.ncols)
            .filter(|&p| self.top[p] == Spin::Minus)
            .map(|p| self.column_label(p))
            .collect()
    }
}

/// The mixed system whose unique state has left edges `alphas` (in row order).
///
/// Rows with `+a` get the fixed charge `a` (the charges must be distinct and in
/// `1..=N`); rows with `-0` become rows with `-` on both ends.
pub fn mixed_system(n: u32, ncols: usize, alphas: &[DecoratedSpin]) -> Result<IceSystem> {
    let mut cols = Vec::new();
    let mut left = Vec::new();
    for a in alphas {
        if a.is_plus() {
            if a.charge < 1 || a.charge > ncols as i64 {
                return invalid(format!("charge {} outside 1..={ncols}", a.charge));
            }
            cols.push(ncols as i64 - a.charge);
            left.push(LeftBoundary::FixedPlus(a.charge));
        } else {
            if a.charge != 0 {
                return invalid("minus rows must carry charge 0");
            }
            left.push(LeftBoundary::FixedMinus);
        }
    }
    cols.sort_unstable_by(|a, b| b.cmp(a));
    if cols.windows(2).any(|w| w[0] == w[1]) {
        return invalid("plus charges must be distinct");
    }
    IceSystem::custom(n, alphas.len(), ncols, &cols, left)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_row_of_sample_state() {
        let lam = Partition::new(vec![3, 2, 0]).unwrap();
        let sys = build_system(&lam, 3, 1, 6, vec![LeftBoundary::Free; 3], Variant::Gamma).unwrap();
        assert_eq!(sys.top_minus_columns(), vec![5, 3, 0]);
    }

    #[test]
    fn small_systems() {
        let sys = build_system(
            &Partition::new(vec![0]).unwrap(),
            1,
            1,
            1,
            vec![LeftBoundary::Free],
            Variant::Gamma,
        )
        .unwrap();
        assert_eq!(sys.top_minus_columns(), vec![0]);
        let sys = build_system(
            &Partition::new(vec![2, 2]).unwrap(),
            2,
            1,
            4,
            vec![LeftBoundary::Free; 2],
            Variant::Gamma,
        )
        .unwrap();
        assert_eq!(sys.top_minus_columns(), vec![3, 2]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::parse("2,3").is_err());
        assert!(Partition::parse("3,x").is_err());
        let lam = Partition::new(vec![3, 2, 0]).unwrap();
        assert!(build_system(&lam, 3, 1, 5, vec![LeftBoundary::Free; 3], Variant::Gamma).is_err());
        assert!(build_system(&lam, 2, 1, 6, vec![LeftBoundary::Free; 2], Variant::Gamma).is_err());
        assert!(build_system(&lam, 3, 1, 6, vec![LeftBoundary::Free; 2], Variant::Gamma).is_err());
    }

    #[test]
    fn default_width() {
        let sys = IceSystem::for_partition(&Partition::new(vec![2, 1]).unwrap(), 3, 2).unwrap();
        assert_eq!(sys.ncols, 6);
        assert_eq!(sys.top_minus_columns(), vec![4, 2, 0]);
    }
}
