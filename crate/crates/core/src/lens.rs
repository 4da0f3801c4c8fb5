//! Linking pairings of lens spaces and degree-one map queries.
//!
//! A degree-one map `M → L(n, q)` exists exactly when the linking pairing of
//! `L(n, q)` is an orthogonal summand of that of `M`; a spin-preserving one
//! exactly when the same holds for the quadratic forms of the spin structures.

use std::fmt;

use crate::algebra::generator::{Gen2, GenOdd};
use crate::algebra::pairing::Pairing;
use crate::algebra::quadratic::QuadraticForm;
use crate::arith::{factorize, gcd, least_nonresidue, prime_power};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::summands::{orthogonal_summand_with, quadratic_summand_with};

/// `L(n, q)`, with linking form `b(1, 1) = q/n` on `π_1 = Z/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensSpace {
    n: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(n: u64, q: i64) -> Result<LensSpace> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("L({n},{q}): n must be at least 2")));
        }
        let q = q.rem_euclid(n as i64) as u64;
        if gcd(q, n) != 1 {
            return Err(Error::InvalidInput(format!("L({n},{q}): q must be coprime to n")));
        }
        Ok(LensSpace { n, q })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The pairing `[q/n]` on `Z/n`, split over the prime powers `p^a || n`:
    /// the generator `n/p^a` has self-linking `(n/p^a) q / p^a`.
    pub fn pairing(&self) -> Result<Pairing> {
        let mut two = Vec::new();
        let mut odd = Vec::new();
        for (p, a) in factorize(self.n) {
            let pa = p.pow(a);
            let u = ((self.n / pa) as u128 * self.q as u128 % pa as u128) as i64;
            if p == 2 {
                two.push(Gen2::cyclic(a, u)?);
            } else {
                odd.push(GenOdd::from_unit(p, a, u)?);
            }
        }
        Ok(Pairing::from_parts(two, odd))
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.n, self.q)
    }
}

pub fn lens_pairing(l: &LensSpace) -> Result<Pairing> {
    l.pairing()
}

/// The pairing of a connected sum; the empty sum is the 3-sphere.
pub fn connected_sum(factors: &[LensSpace]) -> Result<Pairing> {
    factors.iter().try_fold(Pairing::new(), |acc, l| Ok(acc.oplus(&l.pairing()?)))
}

/// A complement witnessing a degree-one map onto `target`, if one exists.
pub fn degree_one_onto_lens(source: &Pairing, target: &LensSpace) -> Result<Option<Pairing>> {
    degree_one_onto_lens_with(source, target, &Limits::default())
}

pub fn degree_one_onto_lens_with(source: &Pairing, target: &LensSpace, limits: &Limits) -> Result<Option<Pairing>> {
    orthogonal_summand_with(&target.pairing()?, source, limits)
}

/// One `q` per isomorphism class of pairings `[q/n]` with `n = p^k`.
pub fn lens_residue_classes(n: u64) -> Result<Vec<u64>> {
    let (p, k) = prime_power(n).ok_or_else(|| Error::InvalidInput(format!("{n} is not a prime power")))?;
    Ok(if p == 2 {
        match k {
            1 => vec![1],
            2 => vec![1, 3],
            _ => vec![1, 3, 5, 7],
        }
    } else {
        vec![1, least_nonresidue(p)]
    })
}

/// Whether the source admits a degree-one map onto every lens space with
/// fundamental group `Z/n`, `n` a prime power.
pub fn onto_all_lens(source: &Pairing, n: u64) -> Result<bool> {
    onto_all_lens_with(source, n, &Limits::default())
}

pub fn onto_all_lens_with(source: &Pairing, n: u64, limits: &Limits) -> Result<bool> {
    for q in lens_residue_classes(n)? {
        if degree_one_onto_lens_with(source, &LensSpace::new(n, q as i64)?, limits)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `target` (which must have cyclic underlying group) is an
/// orthogonal summand of `source`, with the complement.
pub fn spin_degree_one(source: &QuadraticForm, target: &QuadraticForm) -> Result<Option<QuadraticForm>> {
    spin_degree_one_with(source, target, &Limits::default())
}

pub fn spin_degree_one_with(
    source: &QuadraticForm,
    target: &QuadraticForm,
    limits: &Limits,
) -> Result<Option<QuadraticForm>> {
    let base = target.underlying_pairing();
    let two_cyclic = base.two_part().len() <= 1 && base.two_part().iter().all(Gen2::is_cyclic);
    let mut primes: Vec<u64> = base.odd_part().iter().map(|g| g.p).collect();
    let odd_count = primes.len();
    primes.dedup();
    if !two_cyclic || primes.len() != odd_count {
        return Err(Error::Precondition(format!(
            "target {target} must have cyclic underlying group (the homotopy type of a lens space)"
        )));
    }
    quadratic_summand_with(target, source, limits)
}
