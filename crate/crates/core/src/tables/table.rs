use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::z8bar::{Sign, Z8Bar};
use crate::error::{Error, Result};

/// The monoid a table's signature row lives in.
pub trait Signature: Copy + Eq + Default + fmt::Debug + fmt::Display {
    fn combine(self, other: Self) -> Self;
}

impl Signature for Z8Bar {
    fn combine(self, other: Self) -> Self {
        self + other
    }
}

impl Signature for Sign {
    fn combine(self, other: Self) -> Self {
        self * other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Pairings on 2-groups, indexed from 1.
    Two,
    /// Pairings on `p`-groups for an odd prime `p`, indexed from 1.
    Odd(u64),
    /// Quadratic forms on 2-groups, indexed from 0.
    Quadratic,
}

impl Flavor {
    pub fn domain_min(self) -> u32 {
        match self {
            Flavor::Quadratic => 0,
            Flavor::Two | Flavor::Odd(_) => 1,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Two => write!(f, "two"),
            Flavor::Odd(p) => write!(f, "odd:{p}"),
            Flavor::Quadratic => write!(f, "quadratic"),
        }
    }
}

/// A finitely supported map `index -> (rank, signature)`.
///
/// Only entries that differ from the neutral value `(0, 0)` (resp. `(0, +1)`)
/// are stored, so structural equality is equality of the trivially extended
/// tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table<S> {
    flavor: Flavor,
    entries: BTreeMap<u32, (u32, S)>,
}

pub type SigTable = Table<Z8Bar>;
pub type OddTable = Table<Sign>;

impl SigTable {
    pub fn two() -> Self {
        Table { flavor: Flavor::Two, entries: BTreeMap::new() }
    }

    pub fn quadratic() -> Self {
        Table { flavor: Flavor::Quadratic, entries: BTreeMap::new() }
    }
}

impl OddTable {
    pub fn odd(p: u64) -> Self {
        Table { flavor: Flavor::Odd(p), entries: BTreeMap::new() }
    }
}

impl<S: Signature> Table<S> {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn get(&self, k: u32) -> (u32, S) {
        self.entries.get(&k).copied().unwrap_or((0, S::default()))
    }

    pub fn rank(&self, k: u32) -> u32 {
        self.get(k).0
    }

    pub fn sig(&self, k: u32) -> S {
        self.get(k).1
    }

    pub fn set(&mut self, k: u32, r: u32, s: S) -> Result<()> {
        if k < self.flavor.domain_min() {
            return Err(Error::InvalidInput(format!("index {k} is below the domain of a {} table", self.flavor)));
        }
        if r == 0 && s == S::default() {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, (r, s));
        }
        Ok(())
    }

    pub fn with(mut self, k: u32, r: u32, s: S) -> Result<Self> {
        self.set(k, r, s)?;
        Ok(self)
    }

    /// Non-neutral entries in increasing index order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, S)> + '_ {
        self.entries.iter().map(|(&k, &(r, s))| (k, r, s))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest index with a non-neutral entry.
    pub fn max_index(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// Pointwise sum: ranks add, signatures combine in their monoid.
    pub fn table_sum(&self, other: &Self) -> Result<Self> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(self.flavor.to_string(), other.flavor.to_string()));
        }
        let mut out = self.clone();
        for (k, r, s) in other.entries() {
            let (r0, s0) = out.get(k);
            out.set(k, r0 + r, s0.combine(s))?;
        }
        Ok(out)
    }

    /// Sum of ranks at indices strictly above `m`.
    pub fn rank_above(&self, m: u32) -> u64 {
        self.entries.range(m + 1..).map(|(_, &(r, _))| r as u64).sum()
    }

    /// Restriction to indices `>= from`, re-flavored.
    pub(crate) fn restricted(&self, from: u32, flavor: Flavor) -> Self {
        Table { flavor, entries: self.entries.range(from..).map(|(&k, &v)| (k, v)).collect() }
    }
}

impl<S: Signature> fmt::Display for Table<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        if self.flavor == Flavor::Quadratic && !self.entries.contains_key(&0) {
            write!(f, "0:(0,{})", S::default())?;
            first = false;
        }
        for (k, r, s) in self.entries() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{k}:({r},{s})")?;
        }
        write!(f, "}}")
    }
}

/// A table of either signature kind, as read from a file.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyTable {
    Sig(SigTable),
    Odd(OddTable),
}

impl AnyTable {
    pub fn flavor(&self) -> Flavor {
        match self {
            AnyTable::Sig(t) => t.flavor(),
            AnyTable::Odd(t) => t.flavor(),
        }
    }
}

impl fmt::Display for AnyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyTable::Sig(t) => t.fmt(f),
            AnyTable::Odd(t) => t.fmt(f),
        }
    }
}
