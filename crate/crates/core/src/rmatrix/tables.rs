use serde::Serialize;

use super::labels::{rep0, rep1, RCase};
use crate::coeffring::{CoeffElement, LaurentPoly, RationalFunction};
use crate::error::{invalid, Result};
use crate::lattice::DecoratedSpin;

/// Placement of the two spectral parameters inside an `r`-variable ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Vars {
    pub r: usize,
    pub first: usize,
    pub second: usize,
}

impl Vars {
    /// `z1, z2` in a two-variable ring.
    pub fn pair() -> Self {
        Self {
            r: 2,
            first: 0,
            second: 1,
        }
    }

    pub fn new(r: usize, first: usize, second: usize) -> Result<Self> {
        if first >= r || second >= r || first == second {
            return invalid(format!("bad variable pair ({first}, {second}) for {r} variables"));
        }
        Ok(Self { r, first, second })
    }

    pub fn swapped(self) -> Self {
        Self {
            r: self.r,
            first: self.second,
            second: self.first,
        }
    }

    /// `c * z_first^e1 * z_second^e2`.
    pub fn mono(&self, e1: i64, e2: i64, c: CoeffElement) -> LaurentPoly {
        let mut exps = vec![0; self.r];
        exps[self.first] += e1;
        exps[self.second] += e2;
        LaurentPoly::monomial(exps, c)
    }

    /// `z_first^n - v z_second^n`, the all-minus Gamma entry.
    pub fn a2_entry(&self, n: u32) -> LaurentPoly {
        let k = n as i64;
        self.mono(k, 0, CoeffElement::one(n)) - self.mono(0, k, CoeffElement::v(n))
    }
}

/// Charges `(a, b)` of an R pattern: `a` is the top-left decoration and `b`
/// the bottom-left one, except in V and VIII where `a` is the bottom-left one.
pub(crate) fn pattern_charges(case: RCase, alpha: DecoratedSpin, beta: DecoratedSpin) -> (i64, i64) {
    match case {
        RCase::V | RCase::VIII => (alpha.charge, 0),
        RCase::VI | RCase::VII => (beta.charge, 0),
        _ => (beta.charge, alpha.charge),
    }
}

fn diff(n: u32, vars: &Vars, c: CoeffElement) -> LaurentPoly {
    let k = n as i64;
    vars.mono(k, 0, c.clone()) - vars.mono(0, k, c)
}

/// Gamma R-vertex entry as a polynomial.
pub(crate) fn gamma_entry(n: u32, case: RCase, a: i64, b: i64, vars: &Vars) -> LaurentPoly {
    let k = n as i64;
    let one = CoeffElement::one(n);
    let v = CoeffElement::v(n);
    match case {
        RCase::I => vars.mono(0, k, one) - vars.mono(k, 0, v),
        RCase::II => diff(n, vars, CoeffElement::g(n, a - b)),
        RCase::III => {
            let c = rep0(a - b, n);
            vars.mono(c, k - c, CoeffElement::one_minus_v(n))
        }
        RCase::IV => vars.a2_entry(n),
        RCase::V => diff(n, vars, v),
        RCase::VI => diff(n, vars, one),
        RCase::VII => {
            let a = rep1(a, n);
            vars.mono(a, k - a, CoeffElement::one_minus_v(n))
        }
        RCase::VIII => {
            let a = rep1(a, n);
            vars.mono(k - a, a, CoeffElement::one_minus_v(n))
        }
    }
}

/// Entries written in `X = (z2/z1)^n` over the denominator `1 - vX`, with
/// numerator and denominator multiplied through by `z1^n`.
pub(crate) fn printed_rhat_entry(n: u32, case: RCase, a: i64, b: i64, vars: &Vars) -> RationalFunction {
    let k = n as i64;
    let x = |c: CoeffElement| vars.mono(0, k, c);
    let unit = |c: CoeffElement| vars.mono(k, 0, c);
    let num = match case {
        RCase::I => x(CoeffElement::one(n)) - unit(CoeffElement::v(n)),
        RCase::II => diff(n, vars, CoeffElement::g(n, a - b)),
        RCase::III => {
            if rep0(a, n) > rep0(b, n) {
                x(CoeffElement::one_minus_v(n))
            } else {
                unit(CoeffElement::one_minus_v(n))
            }
        }
        RCase::IV => vars.a2_entry(n),
        RCase::V => diff(n, vars, CoeffElement::v(n)),
        RCase::VI => diff(n, vars, CoeffElement::one(n)),
        RCase::VII => x(CoeffElement::one_minus_v(n)),
        RCase::VIII => unit(CoeffElement::one_minus_v(n)),
    };
    RationalFunction::new(num, vars.a2_entry(n)).expect("nonzero denominator")
}

/// Right column of the quantum-superalgebra comparison table with `z = (z2/z1)^n`
/// and `q^2 = v`, multiplied through by `z1^n`.
pub(crate) fn kojima_entry(n: u32, case: RCase, a: i64, b: i64, vars: &Vars) -> RationalFunction {
    let k = n as i64;
    let z = |c: CoeffElement| vars.mono(0, k, c);
    let unit = |c: CoeffElement| vars.mono(k, 0, c);
    let one = CoeffElement::one(n);
    let v = CoeffElement::v(n);
    let q = CoeffElement::q(n);
    let num = match case {
        RCase::I => z(one) - unit(v),
        RCase::II | RCase::V | RCase::VI => unit(q.clone()) - z(q),
        RCase::III => {
            let c = v - one;
            if rep1(a, n) > rep1(b, n) {
                z(c)
            } else {
                unit(c)
            }
        }
        RCase::IV => z(v) - unit(one),
        RCase::VII => z(CoeffElement::one_minus_v(n)),
        RCase::VIII => unit(CoeffElement::one_minus_v(n)),
    };
    RationalFunction::new(num, vars.mono(k, 0, CoeffElement::one(n))).expect("nonzero denominator")
}

/// Reference entries as printed, in the variables `z` and `q`.
pub fn kojima_reference_text(case: RCase) -> &'static str {
    match case {
        RCase::I => "z - q^2",
        RCase::II => "q*(1 - z)",
        RCase::III => "z*(q^2 - 1) if a > b, q^2 - 1 if a < b",
        RCase::IV => "q^2*z - 1",
        RCase::V => "q*(1 - z)",
        RCase::VI => "q*(1 - z)",
        RCase::VII => "z*(1 - q^2)",
        RCase::VIII => "1 - q^2",
    }
}
