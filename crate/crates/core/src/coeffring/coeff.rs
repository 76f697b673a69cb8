//! Elements of the coefficient ring: rational combinations of `v^(k/2) * g-monomial`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::monomial::GaussMonomial;
use crate::error::{Error, Result};

/// Key of a term: half-exponent of `v` and the Gauss monomial.
pub type CoeffKey = (i64, GaussMonomial);

/// A finite sum `sum c * v^(v2/2) * m` with nonzero rational `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffElement {
    n: u32,
    terms: BTreeMap<CoeffKey, BigRational>,
}

impl CoeffElement {
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "modulus must be positive");
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::term(n, 0, GaussMonomial::one(n), BigRational::one())
    }

    pub fn from_rational(n: u32, c: BigRational) -> Self {
        Self::term(n, 0, GaussMonomial::one(n), c)
    }

    pub fn from_int(n: u32, c: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * v^(v2/2) * m`.
    pub fn term(n: u32, v2: i64, m: GaussMonomial, c: BigRational) -> Self {
        assert_eq!(m.modulus(), n, "modulus mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((v2, m), c);
        }
        Self { n, terms }
    }

    /// `v^(k/2)`; `k = 2` is `v` and `k = 1` is `q = sqrt(v)`.
    pub fn v_half_power(n: u32, k: i64) -> Self {
        Self::term(n, k, GaussMonomial::one(n), BigRational::one())
    }

    pub fn v(n: u32) -> Self {
        Self::v_half_power(n, 2)
    }

    /// `q = v^(1/2)`.
    pub fn q(n: u32) -> Self {
        Self::v_half_power(n, 1)
    }

    /// `1 - v`, which occurs in many weights.
    pub fn one_minus_v(n: u32) -> Self {
        Self::one(n) - Self::v(n)
    }

    /// The Gauss symbol `g(a)`; `g(a)` with `n | a` is `-v`.
    pub fn g(n: u32, a: i64) -> Self {
        let r = a.rem_euclid(n as i64) as u32;
        if r == 0 {
            -Self::v(n)
        } else {
            Self::term(n, 0, GaussMonomial::symbol(n, r), BigRational::one())
        }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|((v2, m), c)| *v2 == 0 && m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&CoeffKey, &BigRational)> {
        self.terms.iter()
    }

    /// The rational constant if the element has no `v` or `g` dependence.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let ((v2, m), c) = self.terms.iter().next().unwrap();
                (*v2 == 0 && m.is_one()).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True if the element is a single term, hence a unit in the ring
    /// (each `g(a)` is invertible with `g(a)^-1 = g(n-a) / v`).
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Inverse of a single term; `None` for anything else.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let n = self.n;
        let ((v2, m), c) = self.terms.iter().next().unwrap();
        let mut acc = Self::term(n, -v2, GaussMonomial::one(n), c.recip());
        for (a, &e) in m.exponents().iter().enumerate() {
            let inv = Self::g(n, n as i64 - 1 - a as i64) * Self::v_half_power(n, -2);
            for _ in 0..e {
                acc = acc * inv.clone();
            }
        }
        Some(acc)
    }

    pub(crate) fn insert_add(&mut self, key: CoeffKey, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for ((v2a, ma), ca) in &self.terms {
            for ((v2b, mb), cb) in &other.terms {
                let (m, shift) = ma.mul(mb);
                out.insert_add((v2a + v2b + shift, m), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Neg for &CoeffElement {
    type Output = CoeffElement;
    fn neg(self) -> CoeffElement {
        CoeffElement {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for CoeffElement {
    type Output = CoeffElement;
    fn neg(self) -> CoeffElement {
        -&self
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            /// Panics if the operands live in different rings; use the `checked_*` form to get an error.
            fn $m(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).expect("ring operands must match")
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(CoeffElement, Add, add, checked_add);
forward_binop!(CoeffElement, Sub, sub, checked_sub);
forward_binop!(CoeffElement, Mul, mul, checked_mul);

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_v(v2: i64) -> Option<String> {
    match v2 {
        0 => None,
        2 => Some("v".into()),
        k if k % 2 == 0 => Some(format!("v^{}", k / 2)),
        k => Some(format!("v^({k}/2)")),
    }
}

/// Renders a single term `c * v^.. * g..` with an explicit leading sign.
pub(crate) fn fmt_term(v2: i64, m: &GaussMonomial, c: &BigRational, extra: &str) -> String {
    let mut factors: Vec<String> = Vec::new();
    if let Some(s) = fmt_v(v2) {
        factors.push(s);
    }
    if !m.is_one() {
        factors.push(m.to_string());
    }
    if !extra.is_empty() {
        factors.push(extra.to_string());
    }
    let sign = if c.is_negative() { "-" } else { "+" };
    let a = c.abs();
    let body = if factors.is_empty() {
        fmt_rational(&a)
    } else if a.is_one() {
        factors.join("*")
    } else {
        format!("{}*{}", fmt_rational(&a), factors.join("*"))
    };
    format!("{sign}{body}")
}

pub(crate) fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (sign, body) = t.split_at(1);
        if i == 0 {
            if sign == "-" {
                s.push('-');
            }
        } else {
            s.push_str(if sign == "-" { " - " } else { " + " });
        }
        s.push_str(body);
    }
    s
}

impl fmt::Display for CoeffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|((v2, m), c)| fmt_term(*v2, m, c, "")).collect();
        write!(f, "{}", join_terms(terms))
    }
}
