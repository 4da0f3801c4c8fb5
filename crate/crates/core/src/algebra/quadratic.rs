use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::algebra::generator::{GenOdd, QGen2};
use crate::algebra::pairing::Pairing;
use crate::algebra::z8bar::Z8Bar;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::gauss::quad_arg;
use crate::oracle::gram_of::gram_of_qgen2;
use crate::tables::SigTable;

/// A homogeneous quadratic form up to isomorphism: refined 2-adic generators
/// plus an odd part, whose refinement is unique and therefore carries no data.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    two: Vec<QGen2>,
    odd: Vec<GenOdd>,
}

impl QuadraticForm {
    pub fn new() -> Self {
        QuadraticForm::default()
    }

    pub fn from_parts(mut two: Vec<QGen2>, mut odd: Vec<GenOdd>) -> Self {
        two.sort();
        odd.sort();
        QuadraticForm { two, odd }
    }

    pub fn from_two(two: impl IntoIterator<Item = QGen2>) -> Self {
        QuadraticForm::from_parts(two.into_iter().collect(), Vec::new())
    }

    pub fn two_part(&self) -> &[QGen2] {
        &self.two
    }

    pub fn odd_part(&self) -> &[GenOdd] {
        &self.odd
    }

    pub fn is_empty(&self) -> bool {
        self.two.is_empty() && self.odd.is_empty()
    }

    pub fn oplus(&self, other: &QuadraticForm) -> QuadraticForm {
        let mut two = self.two.clone();
        two.extend_from_slice(&other.two);
        let mut odd = self.odd.clone();
        odd.extend_from_slice(&other.odd);
        QuadraticForm::from_parts(two, odd)
    }

    pub fn underlying_pairing(&self) -> Pairing {
        Pairing::from_parts(self.two.iter().map(QGen2::underlying).collect(), self.odd.clone())
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut ps: BTreeSet<u64> = self.odd.iter().map(|g| g.p).collect();
        if !self.two.is_empty() {
            ps.insert(2);
        }
        ps.into_iter().collect()
    }

    /// `σ_0` of the 2-part: the `Z/8` sum of the generators' Gauss-sum arguments.
    pub fn sigma0(&self) -> Result<u8> {
        self.sigma0_with(&Limits::default())
    }

    pub fn sigma0_with(&self, limits: &Limits) -> Result<u8> {
        let mut s = 0u8;
        for g in &self.two {
            s = (s + generator_sigma0(*g, limits)?) % 8;
        }
        Ok(s)
    }

    /// Quadratic table of the 2-part: `(0, σ_0)` at index 0, the underlying
    /// pairing's invariants above.
    pub fn quad_invariant_table(&self) -> Result<SigTable> {
        self.quad_invariant_table_with(&Limits::default())
    }

    pub fn quad_invariant_table_with(&self, limits: &Limits) -> Result<SigTable> {
        let s0 = self.sigma0_with(limits)?;
        let base = self.underlying_pairing().invariant_table_two();
        let mut t = base.restricted(1, crate::tables::Flavor::Quadratic);
        t.set(0, 0, Z8Bar::Finite(s0))?;
        Ok(t)
    }

    /// Isomorphism, decided by the 2-adic quadratic table and the odd pairing tables.
    pub fn is_isomorphic(&self, other: &QuadraticForm) -> Result<bool> {
        if self.quad_invariant_table()? != other.quad_invariant_table()? {
            return Ok(false);
        }
        let (a, b) = (self.underlying_pairing(), other.underlying_pairing());
        let mut primes: BTreeSet<u64> = self.primes().into_iter().collect();
        primes.extend(other.primes());
        Ok(primes.into_iter().filter(|&p| p != 2).all(|p| a.invariant_table(p) == b.invariant_table(p)))
    }
}

fn sigma0_cache() -> &'static Mutex<HashMap<QGen2, u8>> {
    static CACHE: OnceLock<Mutex<HashMap<QGen2, u8>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `σ_0` of one generator by exact enumeration, memoized per symbol.
pub fn generator_sigma0(g: QGen2, limits: &Limits) -> Result<u8> {
    if let Some(&s) = sigma0_cache().lock().expect("cache lock").get(&g) {
        return Ok(s);
    }
    let order: u128 = 1u128 << (g.level() * g.underlying().rank());
    if order > limits.max_generator_order {
        return Err(Error::Resource(format!(
            "sigma_0 of {g}: group order {order} exceeds the enumeration bound {}",
            limits.max_generator_order
        )));
    }
    let s = quad_arg(&gram_of_qgen2(g))?;
    sigma0_cache().lock().expect("cache lock").insert(g, s);
    Ok(s)
}

impl fmt::Display for QuadraticForm {
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
