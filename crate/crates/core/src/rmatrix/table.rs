use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::labels::{classify, labels, ChargeMode, RCase, Rep};
use super::tables::{gamma_entry, kojima_entry, pattern_charges, printed_rhat_entry, Vars};
use crate::coeffring::{CoeffElement, LaurentPoly, RationalFunction};
use crate::error::{invalid, Error, Result};
use crate::lattice::DecoratedSpin;

/// The untransformed weight family of an [`RTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RBase {
    /// Polynomial weights matching the Gamma row vertices.
    Gamma,
    /// Gamma after the basis change `f(+a, z) = z^(a mod n)`, divided by the all-minus entry.
    Rhat,
    /// The modified table in its printed form; differs from `Rhat` at `a = 0 mod n` in VII and VIII.
    RhatPrinted,
    /// The all-`+` block of `RhatPrinted`, zero elsewhere.
    Intro,
    /// Quantum-superalgebra reference entries with `z = (z2/z1)^n`, `q^2 = v`.
    Kojima,
}

impl FromStr for RBase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" | "gamma-r" => Ok(RBase::Gamma),
            "rhat" => Ok(RBase::Rhat),
            "rhat-printed" => Ok(RBase::RhatPrinted),
            "intro" => Ok(RBase::Intro),
            "kojima" => Ok(RBase::Kojima),
            _ => invalid(format!("unknown R table {s:?}")),
        }
    }
}

/// `u_x = f(x, z) v_x` with `f(+a, z) = z^(sign * rep(a))` and `f(-, z) = z^minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisChange {
    pub rep: Rep,
    pub sign: i64,
    pub minus: i64,
}

impl BasisChange {
    pub fn identity() -> Self {
        Self {
            rep: Rep::Zero,
            sign: 0,
            minus: 0,
        }
    }

    /// `f(+a, z) = z^a` with the chosen representative, `f(-, z) = 1`.
    pub fn plus_power(rep: Rep) -> Self {
        Self { rep, sign: 1, minus: 0 }
    }

    pub fn inverse(self) -> Self {
        Self {
            rep: self.rep,
            sign: -self.sign,
            minus: -self.minus,
        }
    }

    pub fn exponent(&self, x: DecoratedSpin, n: u32) -> i64 {
        if x.is_plus() {
            self.sign * self.rep.of(x.charge, n)
        } else {
            self.minus
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
enum TwistKind {
    Trivial,
    Kojima,
    Table(BTreeMap<(DecoratedSpin, DecoratedSpin), CoeffElementKey>),
}

/// Serializable wrapper so twist tables can be compared and printed.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CoeffElementKey(CoeffElement);

impl Serialize for CoeffElementKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// `phi(x, y)` on ordered pairs of distinct visible labels, `x` bottom-left and `y` top-left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistFunction {
    n: u32,
    kind: TwistKind,
}

impl TwistFunction {
    pub fn trivial(n: u32) -> Self {
        Self {
            n,
            kind: TwistKind::Trivial,
        }
    }

    /// `phi(+x, +y) = q / g(y - x)`, `phi(+a, -) = q / v`, `phi(-, +a) = q`.
    pub fn kojima(n: u32) -> Self {
        Self {
            n,
            kind: TwistKind::Kojima,
        }
    }

    /// Explicit values keyed by residue labels; missing pairs default to 1.
    pub fn from_table(n: u32, values: Vec<((DecoratedSpin, DecoratedSpin), CoeffElement)>) -> Result<Self> {
        let map = values
            .into_iter()
            .map(|((x, y), c)| ((x.reduced(n), y.reduced(n)), CoeffElementKey(c)))
            .collect();
        let t = Self {
            n,
            kind: TwistKind::Table(map),
        };
        t.validate()?;
        Ok(t)
    }

    pub fn phi(&self, x: DecoratedSpin, y: DecoratedSpin) -> CoeffElement {
        let n = self.n;
        match &self.kind {
            TwistKind::Trivial => CoeffElement::one(n),
            TwistKind::Kojima => match (x.is_plus(), y.is_plus()) {
                (true, true) => {
                    let g = CoeffElement::g(n, y.charge - x.charge);
                    CoeffElement::q(n) * g.inverse().expect("Gauss symbols are units")
                }
                (true, false) => CoeffElement::v_half_power(n, -1),
                (false, true) => CoeffElement::q(n),
                (false, false) => CoeffElement::one(n),
            },
            TwistKind::Table(m) => m
                .get(&(x.reduced(n), y.reduced(n)))
                .map(|c| c.0.clone())
                .unwrap_or_else(|| CoeffElement::one(n)),
        }
    }

    /// Checks `phi(x, y) phi(y, x) = 1` for every pair of distinct visible labels.
    pub fn validate(&self) -> Result<()> {
        let ls = labels(self.n);
        for &x in &ls {
            for &y in &ls {
                if x == y {
                    continue;
                }
                let p = self.phi(x, y) * self.phi(y, x);
                if !p.is_one() {
                    return invalid(format!("phi({x},{y}) * phi({y},{x}) = {p}, expected 1"));
                }
            }
        }
        Ok(())
    }
}

/// A transformation applied entrywise to an R table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Transform {
    BasisChange(BasisChange),
    Twist(TwistFunction),
    DivideByZ1N,
    Negate(Vec<RCase>),
}

/// An R-vertex weight table with optional transformations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RTable {
    pub n: u32,
    pub base: RBase,
    pub mode: ChargeMode,
    transforms: Vec<Transform>,
}

impl RTable {
    pub fn new(base: RBase, n: u32) -> Self {
        Self {
            n,
            base,
            mode: ChargeMode::Residue,
            transforms: Vec::new(),
        }
    }

    pub fn gamma(n: u32) -> Self {
        Self::new(RBase::Gamma, n)
    }

    pub fn rhat(n: u32) -> Self {
        Self::new(RBase::Rhat, n)
    }

    pub fn with_mode(mut self, mode: ChargeMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn transforms(&self) -> &[Transform] {
        &self.transforms
    }

    pub fn change_basis(mut self, f: BasisChange) -> Self {
        self.transforms.push(Transform::BasisChange(f));
        self
    }

    pub fn twist(mut self, phi: TwistFunction) -> Result<Self> {
        if phi.n != self.n {
            return Err(Error::ModulusMismatch(self.n, phi.n));
        }
        phi.validate()?;
        self.transforms.push(Transform::Twist(phi));
        Ok(self)
    }

    pub fn divide_by_z1n(mut self) -> Self {
        self.transforms.push(Transform::DivideByZ1N);
        self
    }

    pub fn negate(mut self, cases: &[RCase]) -> Self {
        if !cases.is_empty() {
            self.transforms.push(Transform::Negate(cases.to_vec()));
        }
        self
    }

    pub fn case_of(
        &self,
        alpha: DecoratedSpin,
        beta: DecoratedSpin,
        gamma: DecoratedSpin,
        delta: DecoratedSpin,
    ) -> Option<RCase> {
        let case = classify(self.n, self.mode, alpha, beta, gamma, delta)?;
        if self.base == RBase::Intro && !matches!(case, RCase::I | RCase::II | RCase::III) {
            return None;
        }
        Some(case)
    }

    fn base_weight(
        &self,
        case: RCase,
        alpha: DecoratedSpin,
        beta: DecoratedSpin,
        gamma: DecoratedSpin,
        delta: DecoratedSpin,
        vars: &Vars,
    ) -> RationalFunction {
        let n = self.n;
        let (a, b) = pattern_charges(case, alpha, beta);
        match self.base {
            RBase::Gamma => gamma_entry(n, case, a, b, vars).into(),
            RBase::Rhat => {
                let f = BasisChange::plus_power(Rep::Zero);
                let num = gamma_entry(n, case, a, b, vars).shift(&basis_shift(&f, n, alpha, beta, gamma, delta, vars));
                RationalFunction::new(num, vars.a2_entry(n)).expect("nonzero denominator")
            }
            RBase::RhatPrinted | RBase::Intro => printed_rhat_entry(n, case, a, b, vars),
            RBase::Kojima => kojima_entry(n, case, a, b, vars),
        }
    }

    /// The entry `R_{alpha,beta}^{gamma,delta}(z1, z2)`.
    pub fn weight(
        &self,
        alpha: DecoratedSpin,
        beta: DecoratedSpin,
        gamma: DecoratedSpin,
        delta: DecoratedSpin,
        vars: &Vars,
    ) -> RationalFunction {
        let Some(case) = self.case_of(alpha, beta, gamma, delta) else {
            return RationalFunction::zero(vars.r, self.n);
        };
        let mut w = self.base_weight(case, alpha, beta, gamma, delta, vars);
        for t in &self.transforms {
            w = match t {
                Transform::BasisChange(f) => {
                    let s = basis_shift(f, self.n, alpha, beta, gamma, delta, vars);
                    w.mul_poly(&LaurentPoly::monomial(s, CoeffElement::one(self.n)))
                }
                Transform::Twist(phi) if case.is_transmission() => w.scale(&phi.phi(alpha, beta)),
                Transform::Twist(_) => w,
                Transform::DivideByZ1N => {
                    let inv = vars.mono(-(self.n as i64), 0, CoeffElement::one(self.n));
                    w.mul_poly(&inv)
                }
                Transform::Negate(cases) if cases.contains(&case) => -w,
                Transform::Negate(_) => w,
            };
        }
        w
    }

    /// Base name followed by the applied transformations, e.g. `rhat+twist`.
    pub fn label(&self) -> String {
        let mut s = self.base.to_string();
        for t in &self.transforms {
            s.push_str(match t {
                Transform::BasisChange(_) => "+basis",
                Transform::Twist(_) => "+twist",
                Transform::DivideByZ1N => "+scaled",
                Transform::Negate(_) => "+signs",
            });
        }
        if self.mode == ChargeMode::Integer {
            s.push_str("+integer");
        }
        s
    }

    /// Nonzero outputs `(gamma, delta, weight)` for the input `v_alpha ⊗ v_beta`.
    ///
    /// Outputs are always a permutation of the inputs, so only two candidates exist.
    pub fn outputs(
        &self,
        alpha: DecoratedSpin,
        beta: DecoratedSpin,
        vars: &Vars,
    ) -> Vec<(DecoratedSpin, DecoratedSpin, RationalFunction)> {
        let mut cands = vec![(alpha, beta)];
        if alpha != beta {
            cands.push((beta, alpha));
        }
        cands
            .into_iter()
            .filter_map(|(g, d)| {
                let w = self.weight(alpha, beta, g, d, vars);
                (!w.is_zero()).then_some((g, d, w))
            })
            .collect()
    }

    /// All nonzero entries over visible residue labels, in label order.
    pub fn entries(&self, vars: &Vars) -> Vec<([DecoratedSpin; 4], RCase, RationalFunction)> {
        let ls = labels(self.n);
        let mut out = Vec::new();
        for &a in &ls {
            for &b in &ls {
                for &c in &ls {
                    for &d in &ls {
                        if let Some(case) = self.case_of(a, b, c, d) {
                            let w = self.weight(a, b, c, d, vars);
                            if !w.is_zero() {
                                out.push(([a, b, c, d], case, w));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RBase::Gamma => "gamma-r",
            RBase::Rhat => "rhat",
            RBase::RhatPrinted => "rhat-printed",
            RBase::Intro => "intro",
            RBase::Kojima => "kojima",
        })
    }
}

fn basis_shift(
    f: &BasisChange,
    n: u32,
    alpha: DecoratedSpin,
    beta: DecoratedSpin,
    gamma: DecoratedSpin,
    delta: DecoratedSpin,
    vars: &Vars,
) -> Vec<i64> {
    let mut s = vec![0; vars.r];
    s[vars.first] += f.exponent(alpha, n) - f.exponent(gamma, n);
    s[vars.second] += f.exponent(beta, n) - f.exponent(delta, n);
    s
}

/// Gamma entry as a polynomial (residue labels).
pub fn gamma_r_weight(
    n: u32,
    alpha: DecoratedSpin,
    beta: DecoratedSpin,
    gamma: DecoratedSpin,
    delta: DecoratedSpin,
) -> LaurentPoly {
    RTable::gamma(n)
        .weight(alpha, beta, gamma, delta, &Vars::pair())
        .as_poly()
        .expect("Gamma entries are polynomials")
}

/// Modified entry, obtained from the Gamma entry by the basis change
/// `f(+a, z) = z^(a mod n)`, `f(-, z) = 1` and division by `z1^n - v z2^n`.
pub fn rhat_weight(
    n: u32,
    alpha: DecoratedSpin,
    beta: DecoratedSpin,
    gamma: DecoratedSpin,
    delta: DecoratedSpin,
) -> RationalFunction {
    RTable::rhat(n).weight(alpha, beta, gamma, delta, &Vars::pair())
}

/// Modified entry in its printed form.
pub fn rhat_printed_weight(
    n: u32,
    alpha: DecoratedSpin,
    beta: DecoratedSpin,
    gamma: DecoratedSpin,
    delta: DecoratedSpin,
) -> RationalFunction {
    RTable::new(RBase::RhatPrinted, n).weight(alpha, beta, gamma, delta, &Vars::pair())
}

/// Matrix of the table on `V(z1) ⊗ V(z2)` in the basis `v_x ⊗ v_y`,
/// `x, y` in `+0, .., +(n-1), -0`; column = input, row = output.
pub fn as_endomorphism(table: &RTable, vars: &Vars) -> Vec<Vec<RationalFunction>> {
    let ls = labels(table.n);
    let dim = ls.len();
    let mut m = vec![vec![RationalFunction::zero(vars.r, table.n); dim * dim]; dim * dim];
    for (i, &a) in ls.iter().enumerate() {
        for (j, &b) in ls.iter().enumerate() {
            for (k, &c) in ls.iter().enumerate() {
                for (l, &d) in ls.iter().enumerate() {
                    m[k * dim + l][i * dim + j] = table.weight(a, b, c, d, vars);
                }
            }
        }
    }
    m
}
