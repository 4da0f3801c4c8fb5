//! Signature monoids: `Z/8 ∪ {∞}` for 2-adic data and `{±1}` for odd primes.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign};

/// An element of `Z/8 ∪ {∞}` where `∞` absorbs everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Z8Bar {
    Finite(u8),
    Infinity,
}

impl Z8Bar {
    pub const ZERO: Z8Bar = Z8Bar::Finite(0);

    /// All nine elements, finite residues first.
    pub const ALL: [Z8Bar; 9] = [
        Z8Bar::Finite(0),
        Z8Bar::Finite(1),
        Z8Bar::Finite(2),
        Z8Bar::Finite(3),
        Z8Bar::Finite(4),
        Z8Bar::Finite(5),
        Z8Bar::Finite(6),
        Z8Bar::Finite(7),
        Z8Bar::Infinity,
    ];

    pub fn new(v: i64) -> Self {
        Z8Bar::Finite(v.rem_euclid(8) as u8)
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Z8Bar::Infinity)
    }

    pub fn finite(self) -> Option<u8> {
        match self {
            Z8Bar::Finite(v) => Some(v),
            Z8Bar::Infinity => None,
        }
    }

    /// `self - other` for a finite `other`; `∞ - a = ∞`.
    pub fn sub_finite(self, other: u8) -> Self {
        match self {
            Z8Bar::Finite(v) => Z8Bar::new(v as i64 - other as i64),
            Z8Bar::Infinity => Z8Bar::Infinity,
        }
    }
}

impl Default for Z8Bar {
    fn default() -> Self {
        Z8Bar::ZERO
    }
}

impl Add for Z8Bar {
    type Output = Z8Bar;

    fn add(self, rhs: Z8Bar) -> Z8Bar {
        match (self, rhs) {
            (Z8Bar::Finite(a), Z8Bar::Finite(b)) => Z8Bar::Finite((a + b) % 8),
            _ => Z8Bar::Infinity,
        }
    }
}

impl AddAssign for Z8Bar {
    fn add_assign(&mut self, rhs: Z8Bar) {
        *self = *self + rhs;
    }
}

impl Sum for Z8Bar {
    fn sum<I: Iterator<Item = Z8Bar>>(iter: I) -> Z8Bar {
        iter.fold(Z8Bar::ZERO, Add::add)
    }
}

impl fmt::Display for Z8Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Z8Bar::Finite(v) => write!(f, "{v}"),
            Z8Bar::Infinity => write!(f, "inf"),
        }
    }
}

/// Quadratic-residue class of a unit modulo an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Default for Sign {
    fn default() -> Self {
        Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}
