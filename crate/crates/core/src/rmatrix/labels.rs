use std::fmt;

use serde::Serialize;

use crate::lattice::{DecoratedSpin, Spin};

/// How `+` decorations are compared when matching R-vertex patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChargeMode {
    /// Decorations are residues mod `n`.
    Residue,
    /// Decorations are integers; congruent but unequal charges count as distinct.
    Integer,
}

/// Representative of `a` in `[0, n)`.
pub fn rep0(a: i64, n: u32) -> i64 {
    a.rem_euclid(n as i64)
}

/// Representative of `a` in `[1, n]`.
pub fn rep1(a: i64, n: u32) -> i64 {
    match rep0(a, n) {
        0 => n as i64,
        x => x,
    }
}

/// Which representative a basis change or tie-break uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Zero,
    One,
}

impl Rep {
    pub fn of(self, a: i64, n: u32) -> i64 {
        match self {
            Rep::Zero => rep0(a, n),
            Rep::One => rep1(a, n),
        }
    }
}

/// Visible labels in basis order: `+0, .., +(n-1), -0`.
pub fn labels(n: u32) -> Vec<DecoratedSpin> {
    lifted_labels(n, 1)
}

/// `+0, .., +(lifts*n - 1), -0`: each residue with `lifts` integer representatives.
pub fn lifted_labels(n: u32, lifts: u32) -> Vec<DecoratedSpin> {
    (0..(n * lifts) as i64)
        .map(DecoratedSpin::plus)
        .chain(std::iter::once(DecoratedSpin::minus0()))
        .collect()
}

pub fn label_index(x: DecoratedSpin, n: u32) -> usize {
    if x.is_plus() {
        rep0(x.charge, n) as usize
    } else {
        n as usize
    }
}

/// The eight nonzero R-vertex patterns, listed as (alpha, beta, gamma, delta) =
/// (bottom-left, top-left, top-right, bottom-right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RCase {
    /// `(+a, +a, +a, +a)`
    I,
    /// `(+b, +a, +b, +a)`, `a != b`
    II,
    /// `(+b, +a, +a, +b)`, `a != b`
    III,
    /// `(-, -, -, -)`
    IV,
    /// `(+a, -, +a, -)`
    V,
    /// `(-, +a, -, +a)`
    VI,
    /// `(-, +a, +a, -)`
    VII,
    /// `(+a, -, -, +a)`
    VIII,
}

impl RCase {
    pub const ALL: [RCase; 8] = [
        RCase::I,
        RCase::II,
        RCase::III,
        RCase::IV,
        RCase::V,
        RCase::VI,
        RCase::VII,
        RCase::VIII,
    ];

    /// Cases where each output edge continues its input edge.
    pub fn is_transmission(self) -> bool {
        matches!(self, RCase::II | RCase::V | RCase::VI)
    }

    pub fn pattern(self) -> &'static str {
        match self {
            RCase::I => "+a,+a,+a,+a",
            RCase::II => "+b,+a,+b,+a",
            RCase::III => "+b,+a,+a,+b",
            RCase::IV => "-,-,-,-",
            RCase::V => "+a,-,+a,-",
            RCase::VI => "-,+a,-,+a",
            RCase::VII => "-,+a,+a,-",
            RCase::VIII => "+a,-,-,+a",
        }
    }
}

impl fmt::Display for RCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn same(x: DecoratedSpin, y: DecoratedSpin, n: u32, mode: ChargeMode) -> bool {
    match (x.spin, y.spin) {
        (Spin::Plus, Spin::Plus) => match mode {
            ChargeMode::Residue => rep0(x.charge - y.charge, n) == 0,
            ChargeMode::Integer => x.charge == y.charge,
        },
        (Spin::Minus, Spin::Minus) => true,
        _ => false,
    }
}

/// The pattern of a 4-tuple, or `None` if its weight is zero by definition.
pub fn classify(
    n: u32,
    mode: ChargeMode,
    alpha: DecoratedSpin,
    beta: DecoratedSpin,
    gamma: DecoratedSpin,
    delta: DecoratedSpin,
) -> Option<RCase> {
    if [alpha, beta, gamma, delta].iter().any(|x| !x.is_visible(n)) {
        return None;
    }
    let eq = |x, y| same(x, y, n, mode);
    use Spin::{Minus as M, Plus as P};
    match (alpha.spin, beta.spin) {
        (P, P) => {
            if eq(alpha, beta) {
                (eq(gamma, alpha) && eq(delta, beta)).then_some(RCase::I)
            } else if eq(gamma, alpha) && eq(delta, beta) {
                Some(RCase::II)
            } else if eq(gamma, beta) && eq(delta, alpha) {
                Some(RCase::III)
            } else {
                None
            }
        }
        (M, M) => (gamma.spin == M && delta.spin == M).then_some(RCase::IV),
        (P, M) => {
            if eq(gamma, alpha) && delta.spin == M {
                Some(RCase::V)
            } else if gamma.spin == M && eq(delta, alpha) {
                Some(RCase::VIII)
            } else {
                None
            }
        }
        (M, P) => {
            if gamma.spin == M && eq(delta, beta) {
                Some(RCase::VI)
            } else if eq(gamma, beta) && delta.spin == M {
                Some(RCase::VII)
            } else {
                None
            }
        }
    }
}
