//! Products of the formal Gauss-sum symbols `g(1) .. g(n-1)`.
//!
//! The only relations imposed are `g(0) = -v` and `g(a) g(n-a) = v` for
//! `a` not divisible by `n`.

use std::fmt;

use crate::error::{invalid, Result};

/// A monomial `g(1)^e1 ... g(n-1)^e(n-1)` in normal form.
///
/// Normal form means that for every complementary pair `(a, n-a)` with
/// `a < n-a` at most one of the two exponents is nonzero, and for even `n`
/// the exponent of `g(n/2)` is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussMonomial {
    n: u32,
    exps: Vec<u32>,
}

/// Result of [`normalize_monomial`]: `sign * v^(v_half_shift/2) * monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub monomial: GaussMonomial,
    pub v_half_shift: i64,
    pub sign: i8,
}

impl GaussMonomial {
    /// The empty product.
    pub fn one(n: u32) -> Self {
        assert!(n >= 1, "modulus must be positive");
        Self {
            n,
            exps: vec![0; n as usize - 1],
        }
    }

    /// The single symbol `g(a)` for `a` not divisible by `n`.
    pub(crate) fn symbol(n: u32, a: u32) -> Self {
        debug_assert!(!a.is_multiple_of(n));
        let mut m = Self::one(n);
        m.exps[(a % n) as usize - 1] = 1;
        m
    }

    /// Builds a monomial from exponents indexed by `a = 1..n-1`, checking normal form.
    pub fn from_exponents(n: u32, exps: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return invalid("modulus must be positive");
        }
        if exps.len() != n as usize - 1 {
            return invalid(format!("expected {} exponents for n = {n}, got {}", n - 1, exps.len()));
        }
        let m = Self { n, exps };
        if !m.is_normal() {
            return invalid("monomial is not in normal form");
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// Exponents of `g(1) .. g(n-1)`.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `g(a)`; `a` is reduced mod `n` and `g(0)` never occurs.
    pub fn exponent(&self, a: i64) -> u32 {
        let r = a.rem_euclid(self.n as i64) as usize;
        if r == 0 {
            0
        } else {
            self.exps[r - 1]
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_normal(&self) -> bool {
        let n = self.n as usize;
        (1..n).all(|a| {
            let b = n - a;
            if a < b {
                self.exps[a - 1].min(self.exps[b - 1]) == 0
            } else if a == b {
                self.exps[a - 1] <= 1
            } else {
                true
            }
        })
    }

    /// Product of two normal-form monomials, returning `(monomial, v-half shift)`.
    /// No sign arises because `g(0)` is never present.
    pub fn mul(&self, other: &Self) -> (Self, i64) {
        assert_eq!(self.n, other.n, "modulus mismatch");
        let mut exps: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        let v = reduce_pairs(self.n, &mut exps);
        (Self { n: self.n, exps }, 2 * v as i64)
    }
}

/// Cancels complementary pairs in place and returns the number of `v` factors produced.
fn reduce_pairs(n: u32, exps: &mut [u32]) -> u64 {
    let n = n as usize;
    let mut v = 0u64;
    for a in 1..n {
        let b = n - a;
        if a < b {
            let k = exps[a - 1].min(exps[b - 1]);
            exps[a - 1] -= k;
            exps[b - 1] -= k;
            v += k as u64;
        } else if a == b {
            let k = exps[a - 1] / 2;
            exps[a - 1] -= 2 * k;
            v += k as u64;
        }
    }
    v
}

/// Rewrites an arbitrary product of symbols `g(a)` into normal form.
///
/// `raw` lists `(a, exponent)` pairs; `a` is reduced mod `n`, so `g(0)` and
/// `g(n)` are the same symbol. Repeated indices accumulate.
pub fn normalize_monomial<I>(raw: I, n: u32) -> Result<Normalized>
where
    I: IntoIterator<Item = (i64, i64)>,
{
    if n == 0 {
        return invalid("modulus must be positive");
    }
    let mut zero_exp: u64 = 0;
    let mut exps = vec![0u32; n as usize - 1];
    for (a, e) in raw {
        if e < 0 {
            return invalid(format!("negative exponent {e} for g({a})"));
        }
        let r = a.rem_euclid(n as i64) as usize;
        if r == 0 {
            zero_exp += e as u64;
        } else {
            exps[r - 1] += e as u32;
        }
    }
    let v = reduce_pairs(n, &mut exps) + zero_exp;
    Ok(Normalized {
        monomial: GaussMonomial { n, exps },
        v_half_shift: 2 * v as i64,
        sign: if zero_exp.is_multiple_of(2) { 1 } else { -1 },
    })
}

impl fmt::Display for GaussMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "g({})", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
