//! Numeric evaluation with genuine Gauss sums over `F_p`.

use std::f64::consts::PI;

use num::complex::Complex64;
use num::ToPrimitive;

use super::coeff::CoeffElement;
use super::laurent::LaurentPoly;
use super::rational::RationalFunction;
use crate::error::{invalid, Result};

/// Numeric values for `v`, `g(0) .. g(n-1)` and the spectral parameters.
#[derive(Debug, Clone)]
pub struct NumericBackend {
    pub p: u64,
    pub n: u32,
    pub g: Vec<Complex64>,
    pub v: f64,
    pub z: Vec<Complex64>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, phi / q, p) != 1))
        .expect("every prime has a primitive root")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Gauss sums `g(a) = (1/p) sum_u chi(u)^a e(u/p)` for a character `chi` of exact order `n`.
pub fn gauss_sums_numeric(p: u64, n: u32) -> Result<NumericBackend> {
    if n == 0 {
        return invalid("modulus must be positive");
    }
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if !(p - 1).is_multiple_of(2 * n as u64) {
        return invalid(format!("{p} is not 1 mod {}", 2 * n));
    }
    let root = primitive_root(p);
    // Discrete logarithm table: ind[u] with root^ind[u] = u.
    let mut ind = vec![0u64; p as usize];
    let mut x = 1u64;
    for k in 0..p - 1 {
        ind[x as usize] = k;
        x = x * root % p;
    }
    let g = (0..n)
        .map(|a| {
            let s: Complex64 = (1..p)
                .map(|u| {
                    let chi = 2.0 * PI * ((ind[u as usize] * a as u64) % n as u64) as f64 / n as f64;
                    let add = 2.0 * PI * u as f64 / p as f64;
                    Complex64::from_polar(1.0, chi + add)
                })
                .sum();
            s / p as f64
        })
        .collect();
    Ok(NumericBackend {
        p,
        n,
        g,
        v: 1.0 / p as f64,
        z: Vec::new(),
    })
}

impl NumericBackend {
    /// The cheap backend `g(a) = sqrt(v)` for `n` not dividing `a`, `g(0) = -v`, with `v = 1/p`.
    pub fn sqrt_v(p: u64, n: u32) -> Self {
        let v = 1.0 / p as f64;
        let mut g = vec![Complex64::new(v.sqrt(), 0.0); n as usize];
        g[0] = Complex64::new(-v, 0.0);
        Self {
            p,
            n,
            g,
            v,
            z: Vec::new(),
        }
    }

    pub fn with_z(mut self, z: Vec<Complex64>) -> Self {
        self.z = z;
        self
    }

    /// Largest deviation from `g(0) = -v` and `g(a) g(n-a) = v`.
    pub fn relation_defect(&self) -> f64 {
        let n = self.n as usize;
        let mut worst = (self.g[0] + self.v).norm();
        for a in 1..n {
            worst = worst.max((self.g[a] * self.g[n - a] - self.v).norm());
        }
        worst
    }
}

/// Numeric evaluation under a [`NumericBackend`].
pub trait Evaluate {
    fn evaluate(&self, backend: &NumericBackend) -> Result<Complex64>;
}

fn check_modulus(n: u32, b: &NumericBackend) -> Result<()> {
    if n != b.n {
        return invalid(format!("backend has n = {}, value has n = {n}", b.n));
    }
    Ok(())
}

impl Evaluate for CoeffElement {
    fn evaluate(&self, b: &NumericBackend) -> Result<Complex64> {
        check_modulus(self.modulus(), b)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for ((v2, m), c) in self.terms() {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            t *= b.v.powf(*v2 as f64 / 2.0);
            for (i, &e) in m.exponents().iter().enumerate() {
                t *= b.g[i + 1].powu(e);
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl Evaluate for LaurentPoly {
    fn evaluate(&self, b: &NumericBackend) -> Result<Complex64> {
        check_modulus(self.modulus(), b)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.terms() {
            let mut t = c.evaluate(b)?;
            for (i, &x) in e.iter().enumerate().filter(|(_, x)| **x != 0) {
                let Some(z) = b.z.get(i) else {
                    return invalid(format!("{} spectral parameters assigned, z{} needed", b.z.len(), i + 1));
                };
                t *= z.powi(x as i32);
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl Evaluate for RationalFunction {
    fn evaluate(&self, b: &NumericBackend) -> Result<Complex64> {
        Ok(self.numerator().evaluate(b)? / self.denominator().evaluate(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p7_n3() {
        let b = gauss_sums_numeric(7, 3).unwrap();
        assert!((b.g[0] - Complex64::new(-1.0 / 7.0, 0.0)).norm() < 1e-12);
        assert!((b.g[1].norm_sqr() - 1.0 / 7.0).abs() < 1e-9);
        assert!((b.g[1] * b.g[2] - 1.0 / 7.0).norm() < 1e-9);
    }

    #[test]
    fn p13_n2_quadratic() {
        let b = gauss_sums_numeric(13, 2).unwrap();
        assert!((b.g[1] * b.g[1] - 1.0 / 13.0).norm() < 1e-9);
    }

    #[test]
    fn rejects_bad_primes() {
        assert!(gauss_sums_numeric(9, 2).is_err());
        assert!(gauss_sums_numeric(11, 2).is_err());
        assert!(gauss_sums_numeric(7, 2).is_err());
    }

    #[test]
    fn evaluates_ring_elements() {
        let b = gauss_sums_numeric(7, 3).unwrap();
        let v = CoeffElement::v(3).evaluate(&b).unwrap();
        assert!((v - 1.0 / 7.0).norm() < 1e-15);
        let gg = (CoeffElement::g(3, 1) * CoeffElement::g(3, 2)).evaluate(&b).unwrap();
        assert!((gg - 1.0 / 7.0).norm() < 1e-9);
        let raw = CoeffElement::g(3, 1).evaluate(&b).unwrap() * CoeffElement::g(3, 2).evaluate(&b).unwrap();
        assert!((raw - 1.0 / 7.0).norm() < 1e-9);
        assert_eq!(LaurentPoly::zero(2, 3).evaluate(&b).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn unassigned_variable_is_an_error() {
        let b = gauss_sums_numeric(7, 3).unwrap();
        assert!(LaurentPoly::var(2, 3, 1).evaluate(&b).is_err());
    }

    #[test]
    fn sqrt_backend_satisfies_relations() {
        for n in 1..6 {
            assert!(NumericBackend::sqrt_v(11, n).relation_defect() < 1e-12);
        }
    }
}
