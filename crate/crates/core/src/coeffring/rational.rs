//! Quotients of Laurent polynomials, compared by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::{forward_binop, CoeffElement};
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// `num / den` with `den != 0`. No cancellation is attempted.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.arity() != den.arity() {
            return Err(Error::ArityMismatch(num.arity(), den.arity()));
        }
        if num.modulus() != den.modulus() {
            return Err(Error::ModulusMismatch(num.modulus(), den.modulus()));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.arity(), p.modulus());
        Self { num: p, den }
    }

    pub fn zero(r: usize, n: u32) -> Self {
        Self::from_poly(LaurentPoly::zero(r, n))
    }

    pub fn one(r: usize, n: u32) -> Self {
        Self::from_poly(LaurentPoly::one(r, n))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn modulus(&self) -> u32 {
        self.num.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch(self.modulus(), other.modulus()));
        }
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.num.is_zero() {
            return Ok(self.clone());
        }
        if self.num.is_zero() {
            return Ok(other.clone());
        }
        if self.den == other.den {
            return Ok(Self {
                num: &self.num + &other.num,
                den: self.den.clone(),
            });
        }
        Ok(Self {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.num.is_zero() || other.num.is_zero() {
            return Ok(Self::zero(self.arity(), self.modulus()));
        }
        Ok(Self {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self {
            num: &self.num * &other.den,
            den: &self.den * &other.num,
        })
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &CoeffElement) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Rewrites the denominator as `d`, valid only if `d` is a known multiple of the current one.
    pub fn with_denominator(&self, d: &LaurentPoly, factor: &LaurentPoly) -> Self {
        debug_assert_eq!(&(&self.den * factor), d);
        Self {
            num: &self.num * factor,
            den: d.clone(),
        }
    }

    /// Cheap simplifications for display: equal parts, monomial denominators,
    /// and numerators that are a unit multiple of the denominator.
    pub fn simplified(&self) -> Self {
        let (r, n) = (self.arity(), self.modulus());
        if self.num.is_zero() {
            return Self::zero(r, n);
        }
        if let Some((e, c)) = self.den.as_monomial() {
            if let Some(inv) = c.inverse() {
                let shift: Vec<i64> = e.iter().map(|x| -x).collect();
                return Self::from_poly(self.num.shift(&shift).scale(&inv));
            }
        }
        if self.num == self.den {
            return Self::one(r, n);
        }
        if self.num == -&self.den {
            return Self::from_poly(-LaurentPoly::one(r, n));
        }
        self.clone()
    }

    /// Returns the polynomial if the denominator is a unit monomial.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        let s = self.simplified();
        s.den.as_constant().filter(|c| c.is_one()).map(|_| s.num)
    }
}

/// Equality of rational functions: `a.num * b.den == b.num * a.den`.
pub fn rational_eq(a: &RationalFunction, b: &RationalFunction) -> Result<bool> {
    a.check(b)?;
    if a.den.is_zero() || b.den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if a.den == b.den {
        return Ok(a.num == b.num);
    }
    Ok(&a.num * &b.den == &b.num * &a.den)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        rational_eq(self, other).unwrap_or(false)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

forward_binop!(RationalFunction, Add, add, checked_add);
forward_binop!(RationalFunction, Sub, sub, checked_sub);
forward_binop!(RationalFunction, Mul, mul, checked_mul);

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.simplified();
        match s.den.as_constant() {
            Some(c) if c.is_one() => write!(f, "{}", s.num),
            _ => write!(f, "({}) / ({})", s.num, s.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize, e: i64) -> LaurentPoly {
        LaurentPoly::z_pow(2, 3, i, e)
    }

    fn v() -> LaurentPoly {
        LaurentPoly::constant(2, CoeffElement::v(3))
    }

    #[test]
    fn self_quotient_is_one() {
        let d = z(0, 3) - &v() * &z(1, 3);
        let q = RationalFunction::new(d.clone(), d).unwrap();
        assert!(rational_eq(&q, &RationalFunction::one(2, 3)).unwrap());
    }

    #[test]
    fn normalized_vs_cleared_form() {
        let x = &z(0, -3) * &z(1, 3);
        let one = LaurentPoly::one(2, 3);
        let a = RationalFunction::new(&x - &v(), &one - &(&v() * &x)).unwrap();
        let b = RationalFunction::new(z(1, 3) - &v() * &z(0, 3), z(0, 3) - &v() * &z(1, 3)).unwrap();
        assert!(rational_eq(&a, &b).unwrap());
    }

    #[test]
    fn one_is_not_v() {
        let one = RationalFunction::one(2, 3);
        let vv = RationalFunction::from_poly(v());
        assert!(!rational_eq(&one, &vv).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(z(0, 1), LaurentPoly::zero(2, 3)).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn simplify_monomial_denominator() {
        let q = RationalFunction::new(z(0, 3) + z(1, 3), z(0, 3)).unwrap();
        assert_eq!(q.simplified().denominator(), &LaurentPoly::one(2, 3));
        assert_eq!(q.to_string(), "1 + z1^(-3)*z2^3");
    }
}
