//! JSON term format: `{"z": [..], "v2": k, "g": [..], "c": "+num/den"}`.

use num::{BigInt, BigRational, Signed};
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::{json, Value};

use super::coeff::CoeffElement;
use super::laurent::LaurentPoly;
use super::monomial::GaussMonomial;
use super::rational::RationalFunction;
use crate::error::{invalid, Result};

fn fmt_c(c: &BigRational) -> String {
    let sign = if c.is_negative() { '-' } else { '+' };
    format!("{sign}{}/{}", c.numer().abs(), c.denom())
}

fn parse_c(s: &str) -> Result<BigRational> {
    let (neg, body) = match s.as_bytes().first() {
        Some(b'+') => (false, &s[1..]),
        Some(b'-') => (true, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = body.split_once('/').unwrap_or((body, "1"));
    let num: BigInt = num
        .parse()
        .map_err(|_| crate::Error::InvalidInput(format!("bad coefficient {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| crate::Error::InvalidInput(format!("bad coefficient {s:?}")))?;
    if den == BigInt::from(0) {
        return invalid(format!("zero denominator in {s:?}"));
    }
    let c = BigRational::new(num, den);
    Ok(if neg { -c } else { c })
}

/// Serializes the polynomial as an array of terms in canonical order.
pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let mut out = Vec::new();
    for (e, c) in p.terms() {
        for ((v2, m), x) in c.terms() {
            out.push(json!({
                "z": e,
                "v2": v2,
                "g": m.exponents(),
                "c": fmt_c(x),
            }));
        }
    }
    Value::Array(out)
}

/// Parses the term array for a ring with `r` variables and modulus `n`.
pub fn poly_from_json(v: &Value, r: usize, n: u32) -> Result<LaurentPoly> {
    let Some(terms) = v.as_array() else {
        return invalid("polynomial must be a JSON array");
    };
    let mut p = LaurentPoly::zero(r, n);
    for t in terms {
        let z: Vec<i64> = t
            .get("z")
            .and_then(Value::as_array)
            .map(|a| a.iter().filter_map(Value::as_i64).collect())
            .unwrap_or_default();
        if z.len() != r {
            return invalid(format!("term has {} exponents, expected {r}", z.len()));
        }
        let v2 = t
            .get("v2")
            .and_then(Value::as_i64)
            .ok_or_else(|| crate::Error::InvalidInput("missing v2".into()))?;
        let g: Vec<u32> = t
            .get("g")
            .and_then(Value::as_array)
            .map(|a| a.iter().filter_map(|x| x.as_u64().map(|y| y as u32)).collect())
            .unwrap_or_default();
        let m = GaussMonomial::from_exponents(n, g)?;
        let c = parse_c(
            t.get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| crate::Error::InvalidInput("missing c".into()))?,
        )?;
        p = p + LaurentPoly::monomial(z, CoeffElement::term(n, v2, m, c));
    }
    Ok(p)
}

pub fn rational_to_json(f: &RationalFunction) -> Value {
    let s = f.simplified();
    json!({
        "num": poly_to_json(s.numerator()),
        "den": poly_to_json(s.denominator()),
        "text": s.to_string(),
    })
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        poly_to_json(self).serialize(s)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = rational_to_json(self);
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("num", &v["num"])?;
        m.serialize_entry("den", &v["den"])?;
        m.serialize_entry("text", &v["text"])?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let n = 4;
        let p = LaurentPoly::var(2, n, 0).pow(3)
            - LaurentPoly::constant(2, CoeffElement::g(n, 1) * CoeffElement::q(n)) * LaurentPoly::z_pow(2, n, 1, -2)
            + LaurentPoly::constant(2, CoeffElement::from_rational(n, BigRational::new(3.into(), 7.into())));
        let v = poly_to_json(&p);
        assert_eq!(poly_from_json(&v, 2, n).unwrap(), p);
    }

    #[test]
    fn term_layout() {
        let p = -LaurentPoly::constant(1, CoeffElement::v(3));
        let v = poly_to_json(&p);
        assert_eq!(v, json!([{"z": [0], "v2": 2, "g": [0, 0], "c": "-1/1"}]));
    }

    #[test]
    fn rejects_malformed() {
        assert!(poly_from_json(&json!({}), 1, 2).is_err());
        assert!(poly_from_json(&json!([{"z": [1, 2], "v2": 0, "g": [0], "c": "+1/1"}]), 1, 2).is_err());
        assert!(poly_from_json(&json!([{"z": [1], "v2": 0, "g": [0], "c": "+1/0"}]), 1, 2).is_err());
    }
}
