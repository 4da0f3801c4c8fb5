//! Brute-force ground truth on explicit Gram data, independent of the closed
//! forms used by the rest of the crate.

pub mod cyclotomic;
pub mod diagonalize;
pub mod enumerate;
pub mod gauss;
pub mod gram;
pub mod gram_of;
pub mod iso;
pub mod snf;

pub use cyclotomic::CyclotomicSum;
pub use diagonalize::diagonalize_odd;
pub use enumerate::{enumerate_pairings, enumerate_refinements};
pub use gauss::{gauss_levels_2, gauss_sum_2, gauss_sum_quad};
pub use gram::{GramPairing, GramQuadratic};
pub use gram_of::{gram_of_pairing, gram_of_quadratic};
pub use iso::{brute_isomorphic, brute_isomorphic_quad};

use crate::algebra::z8bar::{Sign, Z8Bar};
use crate::arith::{is_prime, valuation};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tables::{AnyTable, OddTable, SigTable};

/// Levels of the `p`-primary cyclic factors of the presentation.
fn primary_levels(g: &GramPairing, p: u64) -> Vec<u32> {
    g.orders().iter().map(|&d| valuation(d, p)).filter(|&a| a > 0).collect()
}

/// The invariant table of `g` at `p`: ranks read off the primary
/// decomposition, signatures from Gauss sums (`p = 2`) or an explicit
/// diagonalization (`p` odd).
pub fn gram_invariant_table(g: &GramPairing, p: u64, limits: &Limits) -> Result<AnyTable> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let levels = primary_levels(g, p);
    let top = levels.iter().copied().max().unwrap_or(0);
    if p == 2 {
        let sigmas = gauss_levels_2(g, top, limits)?;
        let mut t = SigTable::two();
        for k in 1..=top {
            let r = levels.iter().filter(|&&a| a == k).count() as u32;
            t.set(k, r, sigmas[k as usize - 1])?;
        }
        Ok(AnyTable::Sig(t))
    } else {
        let parts = diagonalize_odd(g, p, limits)?;
        let mut t = OddTable::odd(p);
        for k in 1..=top {
            let r = levels.iter().filter(|&&a| a == k).count() as u32;
            let s = parts.iter().filter(|c| c.k == k).fold(Sign::Plus, |acc, c| acc * c.eps);
            if parts.iter().filter(|c| c.k == k).count() as u32 != r {
                return Err(Error::Internal("diagonalization disagrees with the primary decomposition".into()));
            }
            t.set(k, r, s)?;
        }
        Ok(AnyTable::Odd(t))
    }
}

/// The quadratic table of the 2-part of `q`.
pub fn gram_quad_invariant_table(q: &GramQuadratic, limits: &Limits) -> Result<SigTable> {
    let AnyTable::Sig(base) = gram_invariant_table(q.base(), 2, limits)? else {
        unreachable!("p = 2 yields a signature table");
    };
    let mut t = base.restricted(1, crate::tables::Flavor::Quadratic);
    t.set(0, 0, Z8Bar::Finite(gauss_sum_quad(q, limits)?))?;
    Ok(t)
}
