use std::fmt;

use serde::Serialize;

/// A binary edge label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Spin {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Spin {
    pub fn is_plus(self) -> bool {
        self == Spin::Plus
    }

    pub(crate) fn bit(self) -> i64 {
        self.is_plus() as i64
    }

    pub(crate) fn from_bit(b: i64) -> Option<Spin> {
        match b {
            1 => Some(Spin::Plus),
            0 => Some(Spin::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Spin::Plus => '+',
            Spin::Minus => '-',
        }
    }

    pub const BOTH: [Spin; 2] = [Spin::Plus, Spin::Minus];
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A spin together with an integer decoration (its charge).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedSpin {
    pub spin: Spin,
    pub charge: i64,
}

impl DecoratedSpin {
    pub fn plus(charge: i64) -> Self {
        Self {
            spin: Spin::Plus,
            charge,
        }
    }

    pub fn minus(charge: i64) -> Self {
        Self {
            spin: Spin::Minus,
            charge,
        }
    }

    /// The spin `-0`.
    pub fn minus0() -> Self {
        Self::minus(0)
    }

    pub fn is_plus(&self) -> bool {
        self.spin.is_plus()
    }

    pub fn residue(&self, n: u32) -> i64 {
        self.charge.rem_euclid(n as i64)
    }

    /// `+a` for any `a`, or `-a` with `n | a`.
    pub fn is_visible(&self, n: u32) -> bool {
        self.is_plus() || self.residue(n) == 0
    }

    /// Same spin with the charge reduced into `[0, n)`.
    pub fn reduced(&self, n: u32) -> Self {
        Self {
            spin: self.spin,
            charge: self.residue(n),
        }
    }

    /// Parses `+3`, `-0`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (spin, rest) = match s.chars().next()? {
            '+' => (Spin::Plus, &s[1..]),
            '-' | '\u{2212}' => (Spin::Minus, &s[s.chars().next()?.len_utf8()..]),
            _ => return None,
        };
        let charge = if rest.is_empty() { 0 } else { rest.parse().ok()? };
        Some(Self { spin, charge })
    }
}

impl fmt::Display for DecoratedSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.spin, self.charge)
    }
}

impl Serialize for DecoratedSpin {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
