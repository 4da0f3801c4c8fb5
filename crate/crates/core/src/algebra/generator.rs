//! Generator symbols from which every linking pairing and quadratic form is
//! assembled up to isomorphism.
//!
//! * `A^k(a)`: the pairing on `Z/2^k` sending `(1, 1)` to `a/2^k`.
//! * `E0^k`: the hyperbolic pairing `(xy' + x'y)/2^k` on `(Z/2^k)^2`.
//! * `E1^k` (`k >= 2`): the pairing `(2xx' + xy' + x'y + 2yy')/2^k` on `(Z/2^k)^2`.
//! * `C_{p^k}(±)`: the cyclic pairing on `Z/p^k`, `p` odd, classified by the
//!   residue class of its defining unit.

use std::fmt;

use crate::algebra::z8bar::Sign;
use crate::arith::{is_prime, legendre, least_nonresidue};
use crate::error::{Error, Result};

/// Largest level accepted anywhere; keeps `2^(k+1)` inside `u64`.
pub const MAX_LEVEL: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen2 {
    Cyclic { k: u32, a: u64 },
    E0 { k: u32 },
    E1 { k: u32 },
}

/// Number of residue bits `A^k(a)` actually depends on.
fn residue_modulus(k: u32) -> u64 {
    1 << k.min(3)
}

fn check_level(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidGenerator("level must be at least 1".into()));
    }
    if k > MAX_LEVEL {
        return Err(Error::InvalidGenerator(format!("level {k} exceeds the supported maximum {MAX_LEVEL}")));
    }
    Ok(())
}

impl Gen2 {
    pub fn cyclic(k: u32, a: i64) -> Result<Gen2> {
        if a.rem_euclid(2) == 0 {
            return Err(Error::InvalidGenerator(format!("A^{k}({a}) needs an odd residue")));
        }
        normalize(Gen2::Cyclic { k, a: a.rem_euclid(8) as u64 })
    }

    pub fn e0(k: u32) -> Result<Gen2> {
        normalize(Gen2::E0 { k })
    }

    pub fn e1(k: u32) -> Result<Gen2> {
        normalize(Gen2::E1 { k })
    }

    pub fn level(&self) -> u32 {
        match *self {
            Gen2::Cyclic { k, .. } | Gen2::E0 { k } | Gen2::E1 { k } => k,
        }
    }

    /// Rank as a free `Z/2^k`-module.
    pub fn rank(&self) -> u32 {
        match self {
            Gen2::Cyclic { .. } => 1,
            Gen2::E0 { .. } | Gen2::E1 { .. } => 2,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, Gen2::Cyclic { .. })
    }
}

/// Canonical representative of a 2-adic generator.
pub fn normalize(g: Gen2) -> Result<Gen2> {
    match g {
        Gen2::Cyclic { k, a } => {
            check_level(k)?;
            if a % 2 == 0 {
                return Err(Error::InvalidGenerator(format!("A^{k}({a}) needs an odd residue")));
            }
            Ok(Gen2::Cyclic { k, a: a % residue_modulus(k) })
        }
        Gen2::E0 { k } => {
            check_level(k)?;
            Ok(g)
        }
        Gen2::E1 { k } => {
            check_level(k)?;
            if k < 2 {
                return Err(Error::InvalidGenerator("E1^k is only defined for k >= 2".into()));
            }
            Ok(g)
        }
    }
}

impl fmt::Display for Gen2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen2::Cyclic { k, a } => write!(f, "A^{k}({a})"),
            Gen2::E0 { k } => write!(f, "E0^{k}"),
            Gen2::E1 { k } => write!(f, "E1^{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenOdd {
    pub p: u64,
    pub k: u32,
    pub eps: Sign,
}

impl GenOdd {
    pub fn new(p: u64, k: u32, eps: Sign) -> Result<GenOdd> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidGenerator(format!("C{p}^{k}: {p} is not an odd prime")));
        }
        check_level(k)?;
        if (p as f64).powi(k as i32) > u64::MAX as f64 / 4.0 {
            return Err(Error::InvalidGenerator(format!("C{p}^{k}: order too large")));
        }
        Ok(GenOdd { p, k, eps })
    }

    /// The generator whose defining unit is `a` (taken modulo `p`).
    pub fn from_unit(p: u64, k: u32, a: i64) -> Result<GenOdd> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidGenerator(format!("C{p}^{k}: {p} is not an odd prime")));
        }
        match Sign::from_i8(legendre(a, p)) {
            Some(eps) => GenOdd::new(p, k, eps),
            None => Err(Error::InvalidGenerator(format!("C{p}^{k}({a}): residue is divisible by {p}"))),
        }
    }

    /// Canonical defining unit: `1` or the least positive nonresidue.
    pub fn unit(&self) -> u64 {
        match self.eps {
            Sign::Plus => 1,
            Sign::Minus => least_nonresidue(self.p),
        }
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }
}

impl fmt::Display for GenOdd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}^{}({})", self.p, self.k, self.unit())
    }
}

/// Quadratic refinements of the 2-adic generators.
///
/// * `QCyclic{k, abar}`: `q(x) = abar x^2 / 2^(k+1)` on `Z/2^k`, `abar` odd mod `2^(k+1)`.
/// * `QE0{k, α, γ}`: `q(x, y) = (2xy + α 2^k x^2 + γ 2^k y^2) / 2^(k+1)`.
/// * `QE1{k, α, γ}`: `q(x, y) = (2x^2 + 2xy + 2y^2 + α 2^k x^2 + γ 2^k y^2) / 2^(k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGen2 {
    QCyclic { k: u32, abar: u64 },
    QE0 { k: u32, alpha: u8, gamma: u8 },
    QE1 { k: u32, alpha: u8, gamma: u8 },
}

impl QGen2 {
    pub fn cyclic(k: u32, abar: i64) -> Result<QGen2> {
        check_level(k)?;
        if abar.rem_euclid(2) == 0 {
            return Err(Error::InvalidGenerator(format!("Q^{k}({abar}) needs an odd residue")));
        }
        Ok(QGen2::QCyclic { k, abar: abar.rem_euclid(1i64 << (k + 1)) as u64 })
    }

    pub fn e0(k: u32, alpha: u8, gamma: u8) -> Result<QGen2> {
        check_level(k)?;
        Ok(QGen2::QE0 { k, alpha: alpha & 1, gamma: gamma & 1 })
    }

    pub fn e1(k: u32, alpha: u8, gamma: u8) -> Result<QGen2> {
        check_level(k)?;
        if k < 2 {
            return Err(Error::InvalidGenerator("QE1^k is only defined for k >= 2".into()));
        }
        Ok(QGen2::QE1 { k, alpha: alpha & 1, gamma: gamma & 1 })
    }

    pub fn validate(self) -> Result<QGen2> {
        match self {
            QGen2::QCyclic { k, abar } => {
                check_level(k)?;
                QGen2::cyclic(k, (abar % (1u64 << (k + 1))) as i64)
            }
            QGen2::QE0 { k, alpha, gamma } => {
                if alpha > 1 || gamma > 1 {
                    return Err(Error::InvalidGenerator("refinement bits must be 0 or 1".into()));
                }
                QGen2::e0(k, alpha, gamma)
            }
            QGen2::QE1 { k, alpha, gamma } => {
                if alpha > 1 || gamma > 1 {
                    return Err(Error::InvalidGenerator("refinement bits must be 0 or 1".into()));
                }
                QGen2::e1(k, alpha, gamma)
            }
        }
    }

    pub fn level(&self) -> u32 {
        match *self {
            QGen2::QCyclic { k, .. } | QGen2::QE0 { k, .. } | QGen2::QE1 { k, .. } => k,
        }
    }

    /// The linking pairing `λ_q(x, y) = q(x + y) - q(x) - q(y)`.
    pub fn underlying(&self) -> Gen2 {
        match *self {
            QGen2::QCyclic { k, abar } => Gen2::Cyclic { k, a: abar % residue_modulus(k) },
            QGen2::QE0 { k, .. } => Gen2::E0 { k },
            QGen2::QE1 { k, .. } => Gen2::E1 { k },
        }
    }

    /// Every homogeneous refinement of the same underlying generator, in a
    /// fixed order starting with `self`.
    pub fn refinements(&self) -> Vec<QGen2> {
        match *self {
            QGen2::QCyclic { k, abar } => {
                let m = 1u64 << (k + 1);
                vec![*self, QGen2::QCyclic { k, abar: (abar + (1 << k)) % m }]
            }
            QGen2::QE0 { k, alpha, gamma } => [(0, 0), (1, 0), (0, 1), (1, 1)]
                .iter()
                .map(|&(a, c)| QGen2::QE0 { k, alpha: alpha ^ a, gamma: gamma ^ c })
                .collect(),
            QGen2::QE1 { k, alpha, gamma } => [(0, 0), (1, 0), (0, 1), (1, 1)]
                .iter()
                .map(|&(a, c)| QGen2::QE1 { k, alpha: alpha ^ a, gamma: gamma ^ c })
                .collect(),
        }
    }

    /// The refinement with all toggles off lifting `g`.
    pub fn lift(g: Gen2) -> QGen2 {
        match g {
            Gen2::Cyclic { k, a } => QGen2::QCyclic { k, abar: a },
            Gen2::E0 { k } => QGen2::QE0 { k, alpha: 0, gamma: 0 },
            Gen2::E1 { k } => QGen2::QE1 { k, alpha: 0, gamma: 0 },
        }
    }
}

impl fmt::Display for QGen2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QGen2::QCyclic { k, abar } => write!(f, "Q^{k}({abar})"),
            QGen2::QE0 { k, alpha, gamma } => write!(f, "QE0^{k}[{alpha},{gamma}]"),
            QGen2::QE1 { k, alpha, gamma } => write!(f, "QE1^{k}[{alpha},{gamma}]"),
        }
    }
}
