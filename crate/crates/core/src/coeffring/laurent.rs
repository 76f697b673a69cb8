//! Laurent polynomials in `z_1 .. z_r` over the coefficient ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use super::coeff::{forward_binop, CoeffElement};
use crate::error::{invalid, Error, Result};

/// A finite sum `sum_e c_e z^e` with exponent vectors of length `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    r: usize,
    n: u32,
    terms: BTreeMap<Vec<i64>, CoeffElement>,
}

impl LaurentPoly {
    pub fn zero(r: usize, n: u32) -> Self {
        assert!(n >= 1, "modulus must be positive");
        Self {
            r,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize, n: u32) -> Self {
        Self::constant(r, CoeffElement::one(n))
    }

    pub fn constant(r: usize, c: CoeffElement) -> Self {
        Self::monomial(vec![0; r], c)
    }

    /// `c * z^exps`.
    pub fn monomial(exps: Vec<i64>, c: CoeffElement) -> Self {
        let mut p = Self::zero(exps.len(), c.modulus());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `z_i` (0-based index).
    pub fn var(r: usize, n: u32, i: usize) -> Self {
        Self::z_pow(r, n, i, 1)
    }

    /// `z_i^e` (0-based index).
    pub fn z_pow(r: usize, n: u32, i: usize, e: i64) -> Self {
        assert!(i < r, "variable index out of range");
        let mut exps = vec![0; r];
        exps[i] = e;
        Self::monomial(exps, CoeffElement::one(n))
    }

    pub fn arity(&self) -> usize {
        self.r
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &CoeffElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> CoeffElement {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| CoeffElement::zero(self.n))
    }

    /// The single exponent vector if the polynomial is `c * z^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(&Vec<i64>, &CoeffElement)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn as_constant(&self) -> Option<CoeffElement> {
        if self.is_zero() {
            return Some(CoeffElement::zero(self.n));
        }
        self.as_monomial()
            .filter(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
    }

    pub(crate) fn insert_add(&mut self, exps: Vec<i64>, c: CoeffElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        if self.r != other.r {
            return Err(Error::ArityMismatch(self.r, other.r));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (mut out, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.r, self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffElement) -> Self {
        assert_eq!(c.modulus(), self.n, "modulus mismatch");
        let mut out = Self::zero(self.r, self.n);
        for (e, x) in &self.terms {
            out.insert_add(e.clone(), x * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (e, x) in &self.terms {
            out.insert_add(e.clone(), x.scale(c));
        }
        out
    }

    /// Multiplies by `z^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.r, "arity mismatch");
        Self {
            r: self.r,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.r, self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Relabels variables: `z_i` becomes `z_{perm[i]}` (0-based).
    pub fn substitute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.r {
            return invalid(format!("permutation has length {}, expected {}", perm.len(), self.r));
        }
        let mut seen = vec![false; self.r];
        for &p in perm {
            if p >= self.r || seen[p] {
                return invalid("map is not a bijection on the variables");
            }
            seen[p] = true;
        }
        let mut out = Self::zero(self.r, self.n);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.r];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.terms.insert(f, c.clone());
        }
        Ok(out)
    }

    /// Re-embeds into `new_r` variables, sending `z_i` to `z_{targets[i]}`.
    pub fn embed(&self, new_r: usize, targets: &[usize]) -> Self {
        assert_eq!(targets.len(), self.r, "arity mismatch");
        let mut out = Self::zero(new_r, self.n);
        for (e, c) in &self.terms {
            let mut f = vec![0; new_r];
            for (i, &x) in e.iter().enumerate() {
                f[targets[i]] += x;
            }
            out.insert_add(f, c.clone());
        }
        out
    }

    /// If every exponent vector is congruent to one fixed vector mod `m`, returns it (entries in `[0, m)`).
    pub fn coset_mod(&self, m: i64) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first: Vec<i64> = it.next()?.iter().map(|x| x.rem_euclid(m)).collect();
        for e in it {
            if e.iter().zip(&first).any(|(x, f)| x.rem_euclid(m) != *f) {
                return None;
            }
        }
        Some(first)
    }

    /// Leading exponent vector in canonical order.
    pub fn leading_exponent(&self) -> Option<&Vec<i64>> {
        self.terms.keys().next_back()
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            r: self.r,
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

forward_binop!(LaurentPoly, Add, add, checked_add);
forward_binop!(LaurentPoly, Sub, sub, checked_sub);
forward_binop!(LaurentPoly, Mul, mul, checked_mul);

fn fmt_z(e: &[i64]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| {
            if x == 1 {
                format!("z{}", i + 1)
            } else if x > 0 {
                format!("z{}^{}", i + 1, x)
            } else {
                format!("z{}^({})", i + 1, x)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let z = fmt_z(e);
            for ((v2, m), x) in c.terms() {
                out.push(super::coeff::fmt_term(*v2, m, x, &z));
            }
        }
        write!(f, "{}", super::coeff::join_terms(out))
    }
}
