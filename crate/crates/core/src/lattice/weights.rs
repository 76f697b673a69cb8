use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::spin::{DecoratedSpin, Spin};
use crate::coeffring::{CoeffElement, LaurentPoly};
use crate::error::Error;

/// Which family of Boltzmann weights to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Gamma,
    Modified,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" => Ok(Variant::Gamma),
            "modified" => Ok(Variant::Modified),
            _ => Err(Error::InvalidInput(format!("unknown variant {s:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Gamma => "gamma",
            Variant::Modified => "modified",
        })
    }
}

/// The six admissible row-vertex configurations (left, top, right, bottom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexType {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
}

impl VertexType {
    pub const ALL: [VertexType; 6] = [
        VertexType::A1,
        VertexType::A2,
        VertexType::B1,
        VertexType::B2,
        VertexType::C1,
        VertexType::C2,
    ];

    /// Spins in the order left, top, right, bottom.
    pub fn spins(self) -> [Spin; 4] {
        use Spin::{Minus as M, Plus as P};
        match self {
            VertexType::A1 => [P, P, P, P],
            VertexType::A2 => [M, M, M, M],
            VertexType::B1 => [P, M, P, M],
            VertexType::B2 => [M, P, M, P],
            VertexType::C1 => [M, P, P, M],
            VertexType::C2 => [P, M, M, P],
        }
    }

    pub fn classify(left: Spin, top: Spin, right: Spin, bottom: Spin) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.spins() == [left, top, right, bottom])
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexType::A1 => "a1",
            VertexType::A2 => "a2",
            VertexType::B1 => "b1",
            VertexType::B2 => "b2",
            VertexType::C1 => "c1",
            VertexType::C2 => "c2",
        }
    }

    /// Whether some horizontal edge at the vertex carries `-` with the vertex charge.
    fn has_minus_with_charge(self) -> bool {
        matches!(self, VertexType::A2 | VertexType::B2 | VertexType::C1 | VertexType::C2)
    }
}

/// Deliberate weight corruptions, used to check that the verifiers catch faults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mutation {
    /// Replace the `b1` weight `g(a)` by `g(a+1)`.
    B1Shift,
}

impl FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "b1" => Ok(Mutation::B1Shift),
            _ => Err(Error::InvalidInput(format!("unknown mutation {s:?}"))),
        }
    }
}

/// Vertex weights for one variant and modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeightTable {
    pub variant: Variant,
    pub n: u32,
    pub mutation: Option<Mutation>,
}

impl WeightTable {
    pub fn new(variant: Variant, n: u32) -> Self {
        Self {
            variant,
            n,
            mutation: None,
        }
    }

    pub fn gamma(n: u32) -> Self {
        Self::new(Variant::Gamma, n)
    }

    pub fn modified(n: u32) -> Self {
        Self::new(Variant::Modified, n)
    }

    pub fn with_mutation(mut self, m: Option<Mutation>) -> Self {
        self.mutation = m;
        self
    }

    fn divisible(&self, a: i64) -> bool {
        a.rem_euclid(self.n as i64) == 0
    }

    /// Gamma coefficient and `z_i` exponent.
    fn gamma_parts(&self, vt: VertexType, a: i64) -> (CoeffElement, i64) {
        let n = self.n;
        match vt {
            VertexType::A1 | VertexType::C2 => (CoeffElement::one(n), 0),
            VertexType::A2 | VertexType::B2 => (CoeffElement::one(n), 1),
            VertexType::B1 => {
                let shift = match self.mutation {
                    Some(Mutation::B1Shift) => 1,
                    None => 0,
                };
                (CoeffElement::g(n, a + shift), 0)
            }
            VertexType::C1 => {
                if self.divisible(a) {
                    (CoeffElement::one_minus_v(n), 1)
                } else {
                    (CoeffElement::zero(n), 1)
                }
            }
        }
    }

    /// Coefficient and exponent of the weight of `vt` with charge `a`
    /// (the charge of the edge to the right of the vertex).
    pub fn vertex_parts(&self, vt: VertexType, a: i64) -> (CoeffElement, i64) {
        let (c, e) = self.gamma_parts(vt, a);
        match self.variant {
            Variant::Gamma => (c, e),
            Variant::Modified => {
                if vt.has_minus_with_charge() && !self.divisible(a) {
                    return (CoeffElement::zero(self.n), 0);
                }
                let n = self.n as i64;
                let [l, _, r, _] = vt.spins();
                let f = |s: Spin, charge: i64| if s.is_plus() { charge.rem_euclid(n) } else { 0 };
                (c, e + f(l, a + l.bit()) - f(r, a) - 1)
            }
        }
    }

    /// Weight of a vertex in row `row` (0-based) of a system with `r` rows.
    pub fn vertex_weight(&self, vt: VertexType, a: i64, row: usize, r: usize) -> LaurentPoly {
        let (c, e) = self.vertex_parts(vt, a);
        if c.is_zero() {
            return LaurentPoly::zero(r, self.n);
        }
        let mut exps = vec![0; r];
        exps[row] = e;
        LaurentPoly::monomial(exps, c)
    }

    /// Weight of an isolated vertex with decorated horizontal edges.
    ///
    /// Charges are compared modulo `n`: a `+` on the left needs `left = right + 1`,
    /// and every `-` horizontal edge must carry a multiple of `n`.
    pub fn local_weight(
        &self,
        left: DecoratedSpin,
        top: Spin,
        right: DecoratedSpin,
        bottom: Spin,
        row: usize,
        r: usize,
    ) -> LaurentPoly {
        let zero = LaurentPoly::zero(r, self.n);
        let Some(vt) = VertexType::classify(left.spin, top, right.spin, bottom) else {
            return zero;
        };
        if !left.is_visible(self.n) || !right.is_visible(self.n) {
            return zero;
        }
        if left.is_plus() && !self.divisible(left.charge - right.charge - 1) {
            return zero;
        }
        self.vertex_weight(vt, right.charge, row, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_is_exhaustive() {
        let mut count = 0;
        for l in Spin::BOTH {
            for t in Spin::BOTH {
                for r in Spin::BOTH {
                    for b in Spin::BOTH {
                        let conserved = l.bit() + t.bit() == r.bit() + b.bit();
                        assert_eq!(VertexType::classify(l, t, r, b).is_some(), conserved);
                        count += conserved as usize;
                    }
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn modified_values() {
        let n = 3;
        let t = WeightTable::modified(n);
        let z = |e: i64| {
            let (c, x) = t.vertex_parts(VertexType::A1, e);
            assert!(c.is_one());
            x
        };
        assert_eq!(z(2), -3);
        assert_eq!(z(0), 0);
        assert_eq!(t.vertex_parts(VertexType::C1, 3), (CoeffElement::one_minus_v(n), 0));
        assert_eq!(t.vertex_parts(VertexType::C2, 0), (CoeffElement::one(n), 0));
        assert!(t.vertex_parts(VertexType::A2, 1).0.is_zero());
        let t1 = WeightTable::modified(1);
        assert_eq!(t1.vertex_parts(VertexType::C2, 0).1, -1);
        assert_eq!(t1.vertex_parts(VertexType::B1, 4), (CoeffElement::g(1, 4), -1));
    }

    #[test]
    fn gamma_values() {
        let n = 2;
        let t = WeightTable::gamma(n);
        assert_eq!(t.vertex_parts(VertexType::B1, 3), (CoeffElement::g(n, 1), 0));
        assert!(t.vertex_parts(VertexType::C1, 1).0.is_zero());
        assert_eq!(t.vertex_parts(VertexType::C1, 2), (CoeffElement::one_minus_v(n), 1));
        let m = t.with_mutation(Some(Mutation::B1Shift));
        assert_eq!(m.vertex_parts(VertexType::B1, 3), (CoeffElement::g(n, 0), 0));
    }
}
