use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::generator::{Gen2, GenOdd};
use crate::algebra::z8bar::{Sign, Z8Bar};
use crate::tables::{AnyTable, OddTable, SigTable};

/// A linking pairing up to isomorphism, as a formal orthogonal sum of
/// generator symbols grouped by prime. Both multisets are kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    two: Vec<Gen2>,
    odd: Vec<GenOdd>,
}

impl Pairing {
    pub fn new() -> Self {
        Pairing::default()
    }

    pub fn from_parts(mut two: Vec<Gen2>, mut odd: Vec<GenOdd>) -> Self {
        two.sort();
        odd.sort();
        Pairing { two, odd }
    }

    pub fn from_two(two: impl IntoIterator<Item = Gen2>) -> Self {
        Pairing::from_parts(two.into_iter().collect(), Vec::new())
    }

    pub fn from_odd(odd: impl IntoIterator<Item = GenOdd>) -> Self {
        Pairing::from_parts(Vec::new(), odd.into_iter().collect())
    }

    pub fn two_part(&self) -> &[Gen2] {
        &self.two
    }

    pub fn odd_part(&self) -> &[GenOdd] {
        &self.odd
    }

    pub fn odd_part_at(&self, p: u64) -> impl Iterator<Item = &GenOdd> + '_ {
        self.odd.iter().filter(move |g| g.p == p)
    }

    pub fn is_empty(&self) -> bool {
        self.two.is_empty() && self.odd.is_empty()
    }

    /// Primes dividing the order of the underlying group.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: BTreeSet<u64> = self.odd.iter().map(|g| g.p).collect();
        if !self.two.is_empty() {
            ps.insert(2);
        }
        ps.into_iter().collect()
    }

    pub fn push2(&mut self, g: Gen2) {
        let at = self.two.partition_point(|x| *x <= g);
        self.two.insert(at, g);
    }

    pub fn push_odd(&mut self, g: GenOdd) {
        let at = self.odd.partition_point(|x| *x <= g);
        self.odd.insert(at, g);
    }

    /// Orthogonal sum.
    pub fn oplus(&self, other: &Pairing) -> Pairing {
        let mut two = self.two.clone();
        two.extend_from_slice(&other.two);
        let mut odd = self.odd.clone();
        odd.extend_from_slice(&other.odd);
        Pairing::from_parts(two, odd)
    }

    pub fn max_level(&self, p: u64) -> u32 {
        if p == 2 {
            self.two.iter().map(Gen2::level).max().unwrap_or(0)
        } else {
            self.odd_part_at(p).map(|g| g.k).max().unwrap_or(0)
        }
    }

    /// `log2` of the order of the 2-part.
    pub fn two_order_log2(&self) -> u32 {
        self.two.iter().map(|g| g.level() * g.rank()).sum()
    }

    /// Order of the underlying group, if it fits.
    pub fn order(&self) -> Option<u128> {
        let mut n: u128 = 1;
        for g in &self.two {
            n = n.checked_mul(1u128.checked_shl(g.level() * g.rank())?)?;
        }
        for g in &self.odd {
            n = n.checked_mul((g.p as u128).checked_pow(g.k)?)?;
        }
        Some(n)
    }

    /// Rank of the homogeneous level-`k` factor of the `p`-part.
    pub fn rho(&self, p: u64, k: u32) -> u32 {
        if p == 2 {
            self.two.iter().filter(|g| g.level() == k).map(Gen2::rank).sum()
        } else {
            self.odd_part_at(p).filter(|g| g.k == k).count() as u32
        }
    }

    /// 2-adic Gauss-sum signature at level `k`, from the closed forms.
    pub fn sigma2(&self, k: u32) -> Z8Bar {
        self.two.iter().map(|g| sigma2_gen(*g, k)).sum()
    }

    /// Residue class of the level-`k` determinant of the `p`-part.
    pub fn sigma_odd(&self, p: u64, k: u32) -> Sign {
        self.odd_part_at(p).filter(|g| g.k == k).fold(Sign::Plus, |acc, g| acc * g.eps)
    }

    pub fn invariant_table_two(&self) -> SigTable {
        let mut t = SigTable::two();
        for k in 1..=self.max_level(2) {
            t.set(k, self.rho(2, k), self.sigma2(k)).expect("index >= 1");
        }
        t
    }

    pub fn invariant_table_odd(&self, p: u64) -> OddTable {
        let mut t = OddTable::odd(p);
        for k in 1..=self.max_level(p) {
            t.set(k, self.rho(p, k), self.sigma_odd(p, k)).expect("index >= 1");
        }
        t
    }

    pub fn invariant_table(&self, p: u64) -> AnyTable {
        if p == 2 {
            AnyTable::Sig(self.invariant_table_two())
        } else {
            AnyTable::Odd(self.invariant_table_odd(p))
        }
    }

    /// Isomorphism, decided by equality of the complete invariants.
    pub fn is_isomorphic(&self, other: &Pairing) -> bool {
        let mut primes: BTreeSet<u64> = self.primes().into_iter().collect();
        primes.extend(other.primes());
        primes.into_iter().all(|p| self.invariant_table(p) == other.invariant_table(p))
    }
}

/// Closed-form value of `σ_k` on a single generator at level `l`.
pub fn sigma2_gen(g: Gen2, k: u32) -> Z8Bar {
    let l = g.level();
    if l < k {
        return Z8Bar::ZERO;
    }
    let gap = l - k;
    match g {
        Gen2::Cyclic { a, .. } => {
            if gap == 0 {
                Z8Bar::Infinity
            } else if gap % 2 == 1 {
                if a % 4 == 1 {
                    Z8Bar::Finite(1)
                } else {
                    Z8Bar::Finite(7)
                }
            } else {
                Z8Bar::Finite((a % 8) as u8)
            }
        }
        Gen2::E0 { .. } => Z8Bar::ZERO,
        Gen2::E1 { .. } => {
            if gap % 2 == 1 {
                Z8Bar::Finite(4)
            } else {
                Z8Bar::ZERO
            }
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in self.two.iter().map(|g| g.to_string()).chain(self.odd.iter().map(|g| g.to_string())) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
