use num::Integer;
use serde::Serialize;

use crate::coeffring::{rational_eq, CoeffElement, LaurentPoly, RationalFunction};
use crate::error::{invalid, Result};
use crate::lattice::DecoratedSpin;
use crate::rmatrix::{RTable, Vars};

/// A cocharacter `mu` in `Z^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector {
    pub mu: Vec<i64>,
}

impl WeightVector {
    pub fn new(mu: Vec<i64>) -> Self {
        Self { mu }
    }

    /// `rho = (r-1, .., 1, 0)`.
    pub fn rho(r: usize) -> Vec<i64> {
        (0..r as i64).rev().collect()
    }

    /// `mu = rho + c`.
    pub fn from_charges(c: &[i64]) -> Self {
        let rho = Self::rho(c.len());
        Self::new(rho.iter().zip(c).map(|(a, b)| a + b).collect())
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }

    /// `mu - rho`.
    pub fn shifted(&self) -> Vec<i64> {
        let rho = Self::rho(self.rank());
        self.mu.iter().zip(&rho).map(|(a, b)| a - b).collect()
    }

    /// `mu - rho` if all its entries lie in `[0, n)`.
    pub fn charges(&self, n: u32) -> Option<Vec<i64>> {
        let c = self.shifted();
        c.iter().all(|&x| (0..n as i64).contains(&x)).then_some(c)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.rank() {
            return invalid(format!("simple root index {i} outside 1..{}", self.rank()));
        }
        Ok(())
    }

    /// `<alpha_i, mu> = mu_i - mu_{i+1}` (1-based `i`).
    pub fn pairing(&self, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok(self.mu[i - 1] - self.mu[i])
    }

    /// `s_i(mu)`.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut mu = self.mu.clone();
        mu.swap(i - 1, i);
        Ok(Self::new(mu))
    }

    /// The dot action `s_i . mu = s_i(mu) + alpha_i`.
    pub fn dot(&self, i: usize) -> Result<Self> {
        let mut w = self.reflect(i)?;
        w.mu[i - 1] += 1;
        w.mu[i] -= 1;
        Ok(w)
    }
}

/// `X = z^(-n alpha_i) = (z_{i+1} / z_i)^n` raised to `k`.
fn x_pow(r: usize, n: u32, i: usize, k: i64) -> LaurentPoly {
    let mut e = vec![0; r];
    e[i - 1] = -(n as i64) * k;
    e[i] = n as i64 * k;
    LaurentPoly::monomial(e, CoeffElement::one(n))
}

/// `1 - v X`.
fn kp_denominator(r: usize, n: u32, i: usize) -> LaurentPoly {
    LaurentPoly::one(r, n) - x_pow(r, n, i, 1).scale(&CoeffElement::v(n))
}

/// `(1 - v) X^ceil(<alpha_i, mu> / n) / (1 - v X)`.
pub fn tau1(mu: &WeightVector, i: usize, n: u32) -> Result<RationalFunction> {
    let k = Integer::div_ceil(&mu.pairing(i)?, &(n as i64));
    let r = mu.rank();
    let num = x_pow(r, n, i, k).scale(&CoeffElement::one_minus_v(n));
    RationalFunction::new(num, kp_denominator(r, n, i))
}

/// `g(<alpha_i, mu - rho>) (1 - X) / (1 - v X)`.
pub fn tau2(mu: &WeightVector, i: usize, n: u32) -> Result<RationalFunction> {
    let a = mu.pairing(i)? - 1;
    let r = mu.rank();
    let num = (LaurentPoly::one(r, n) - x_pow(r, n, i, 1)).scale(&CoeffElement::g(n, a));
    RationalFunction::new(num, kp_denominator(r, n, i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauMatchCase {
    /// Charge of the upper row, `c_i`.
    pub a: i64,
    /// Charge of the lower row, `c_{i+1}`.
    pub b: i64,
    pub coincident: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauMatchReport {
    pub n: u32,
    pub claim: &'static str,
    pub cases: Vec<TauMatchCase>,
    pub pass: bool,
}

/// For `mu = rho + (a, b)`: `tau1 = R(+b,+a,+a,+b)` and `tau2 = R(+b,+a,+b,+a)`
/// when `a != b`, and `tau1 + tau2 = R(+a,+a,+a,+a)` when `a = b`, with `R` the
/// modified R-vertex in the variables `(z_1, z_2)`.
pub fn taumatch_check(n: u32) -> Result<TauMatchReport> {
    let table = RTable::rhat(n);
    let vars = Vars::pair();
    let p = DecoratedSpin::plus;
    let mut cases = Vec::new();
    for a in 0..n as i64 {
        for b in 0..n as i64 {
            let mu = WeightVector::from_charges(&[a, b]);
            let t1 = tau1(&mu, 1, n)?;
            let t2 = tau2(&mu, 1, n)?;
            let pass = if a == b {
                rational_eq(&(t1 + t2), &table.weight(p(a), p(a), p(a), p(a), &vars))?
            } else {
                rational_eq(&t1, &table.weight(p(b), p(a), p(a), p(b), &vars))?
                    && rational_eq(&t2, &table.weight(p(b), p(a), p(b), p(a), &vars))?
            };
            cases.push(TauMatchCase {
                a,
                b,
                coincident: a == b,
                pass,
            });
        }
    }
    let pass = cases.iter().all(|c| c.pass);
    Ok(TauMatchReport {
        n,
        claim: "scattering constants equal modified R-vertex weights",
        cases,
        pass,
    })
}
