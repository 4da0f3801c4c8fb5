//! Orthogonal-summand detection with explicit complements.
//!
//! For 2-groups, a complement of `part` in `whole` must have ranks
//! `ρ(whole) - ρ(part)` and signatures `σ(whole) - σ(part)` wherever `σ(part)`
//! is finite; where `σ(part) = ∞` its signature is unconstrained. Each way of
//! filling those free entries gives a candidate table, and `part` is a summand
//! exactly when some candidate is admissible.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::generator::GenOdd;
use crate::algebra::pairing::Pairing;
use crate::algebra::quadratic::QuadraticForm;
use crate::algebra::z8bar::Z8Bar;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::realize::{realize_odd, realize_quadratic_with, realize_two};
use crate::tables::{check_admissible, Flavor, OddTable, SigTable};

/// Why no candidate exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryFailure {
    /// `ρ_k(part) > ρ_k(whole)`.
    RankExceeds { index: u32 },
    /// `σ_k(part) = ∞` but `σ_k(whole)` is finite.
    InfinityNotInherited { index: u32 },
}

impl fmt::Display for NecessaryFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NecessaryFailure::RankExceeds { index } => write!(f, "rank of the part exceeds the whole at index {index}"),
            NecessaryFailure::InfinityNotInherited { index } => {
                write!(f, "the part has infinite signature at index {index} but the whole does not")
            }
        }
    }
}

/// The candidate complement tables of `part` in `whole`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateFamily {
    base: SigTable,
    free: Vec<u32>,
    failure: Option<NecessaryFailure>,
}

impl CandidateFamily {
    /// Both tables must share a flavor (two or quadratic).
    pub fn new(whole: &SigTable, part: &SigTable) -> Result<CandidateFamily> {
        if whole.flavor() != part.flavor() {
            return Err(Error::FlavorMismatch(whole.flavor().to_string(), part.flavor().to_string()));
        }
        let flavor = whole.flavor();
        let top = whole.max_index().unwrap_or(0).max(part.max_index().unwrap_or(0));
        let mut base = SigTable::two();
        if flavor == Flavor::Quadratic {
            base = SigTable::quadratic();
        }
        let mut free = Vec::new();
        let mut failure = None;
        for k in flavor.domain_min()..=top {
            let (rw, sw) = whole.get(k);
            let (rp, sp) = part.get(k);
            if rp > rw {
                failure.get_or_insert(NecessaryFailure::RankExceeds { index: k });
                continue;
            }
            match sp {
                Z8Bar::Infinity => {
                    if !sw.is_infinite() {
                        failure.get_or_insert(NecessaryFailure::InfinityNotInherited { index: k });
                    }
                    free.push(k);
                    base.set(k, rw - rp, Z8Bar::ZERO)?;
                }
                Z8Bar::Finite(v) => base.set(k, rw - rp, sw.sub_finite(v))?,
            }
        }
        Ok(CandidateFamily { base, free, failure })
    }

    pub fn failure(&self) -> Option<NecessaryFailure> {
        self.failure
    }

    /// Indices where the part's signature is infinite.
    pub fn free_indices(&self) -> &[u32] {
        &self.free
    }

    /// The fixed part; free indices carry signature 0 here.
    pub fn base(&self) -> &SigTable {
        &self.base
    }

    /// Number of candidates: `9^t`, or 0 when a necessary condition fails.
    pub fn len(&self) -> u128 {
        if self.failure.is_some() {
            0
        } else {
            9u128.pow(self.free.len() as u32)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All candidates, first free index most significant, values in the
    /// order `0, 1, …, 7, ∞`.
    pub fn candidates(&self, limits: &Limits) -> Result<Candidates<'_>> {
        self.iter(limits, false)
    }

    /// As [`candidates`](Self::candidates) but skipping assignments that break
    /// the parity condition at a free index (which admissibility requires).
    pub fn candidates_pruned(&self, limits: &Limits) -> Result<Candidates<'_>> {
        self.iter(limits, true)
    }

    fn iter(&self, limits: &Limits, prune: bool) -> Result<Candidates<'_>> {
        if self.free.len() > limits.max_free_indices {
            return Err(Error::Resource(format!(
                "{} free indices give 9^{} candidates, beyond the bound of {} free indices",
                self.free.len(),
                self.free.len(),
                limits.max_free_indices
            )));
        }
        let options = self
            .free
            .iter()
            .map(|&m| {
                let r = self.base.rank(m);
                let above = self.base.rank_above(m) % 2;
                Z8Bar::ALL
                    .iter()
                    .copied()
                    .filter(|v| {
                        !prune
                            || match v {
                                Z8Bar::Infinity => r > 0,
                                Z8Bar::Finite(x) => (*x as u64) % 2 == above,
                            }
                    })
                    .collect()
            })
            .collect();
        Ok(Candidates { family: self, options, cursor: Some(vec![0; self.free.len()]) })
    }
}

/// Iterator over candidate tables.
pub struct Candidates<'a> {
    family: &'a CandidateFamily,
    options: Vec<Vec<Z8Bar>>,
    cursor: Option<Vec<usize>>,
}

impl Iterator for Candidates<'_> {
    type Item = SigTable;

    fn next(&mut self) -> Option<SigTable> {
        if self.family.failure.is_some() || self.options.iter().any(Vec::is_empty) {
            return None;
        }
        let cur = self.cursor.as_mut()?;
        let mut t = self.family.base.clone();
        for (i, &m) in self.family.free.iter().enumerate() {
            let r = t.rank(m);
            t.set(m, r, self.options[i][cur[i]]).expect("index in domain");
        }
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cursor = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.options[i].len() {
                break;
            }
            cur[i] = 0;
        }
        Some(t)
    }
}

/// The candidate family of the 2-parts.
pub fn candidate_tables(whole: &Pairing, part: &Pairing) -> CandidateFamily {
    CandidateFamily::new(&whole.invariant_table_two(), &part.invariant_table_two()).expect("both tables are flavor two")
}

/// First admissible candidate of the family, if any.
fn first_admissible(family: &CandidateFamily, limits: &Limits) -> Result<Option<SigTable>> {
    if family.failure().is_some() {
        return Ok(None);
    }
    Ok(family.candidates_pruned(limits)?.find(|t| check_admissible(t).verdict))
}

/// Complement of the `p`-part for odd `p`: ranks must not decrease, and
/// where they agree the signs must agree.
fn odd_complement(whole: &OddTable, part: &OddTable) -> Result<Option<Pairing>> {
    let Flavor::Odd(p) = whole.flavor() else { unreachable!("odd tables") };
    let top = whole.max_index().unwrap_or(0).max(part.max_index().unwrap_or(0));
    let mut diff = OddTable::odd(p);
    for k in 1..=top {
        let (rw, sw) = whole.get(k);
        let (rp, sp) = part.get(k);
        if rp > rw || (rp == rw && sp != sw) {
            return Ok(None);
        }
        diff.set(k, rw - rp, sw * sp)?;
    }
    realize_odd(&diff).map(Some)
}

fn odd_primes(a: &[GenOdd], b: &[GenOdd]) -> BTreeSet<u64> {
    a.iter().chain(b).map(|g| g.p).collect()
}

/// A complement `w` with `whole ≅ part ⊕ w`, if `part` is an orthogonal summand.
pub fn orthogonal_summand(part: &Pairing, whole: &Pairing) -> Result<Option<Pairing>> {
    orthogonal_summand_with(part, whole, &Limits::default())
}

pub fn orthogonal_summand_with(part: &Pairing, whole: &Pairing, limits: &Limits) -> Result<Option<Pairing>> {
    let mut witness = Pairing::new();
    for p in odd_primes(whole.odd_part(), part.odd_part()) {
        match odd_complement(&whole.invariant_table_odd(p), &part.invariant_table_odd(p))? {
            Some(w) => witness = witness.oplus(&w),
            None => return Ok(None),
        }
    }
    let family = candidate_tables(whole, part);
    match first_admissible(&family, limits)? {
        Some(t) => witness = witness.oplus(&realize_two(&t)?),
        None => return Ok(None),
    }
    if !whole.is_isomorphic(&part.oplus(&witness)) {
        return Err(Error::Internal(format!("complement {witness} of {part} in {whole} does not check out")));
    }
    Ok(Some(witness))
}

/// A complement `w` with `whole ≅ part ⊕ w` for quadratic forms.
pub fn quadratic_summand(part: &QuadraticForm, whole: &QuadraticForm) -> Result<Option<QuadraticForm>> {
    quadratic_summand_with(part, whole, &Limits::default())
}

pub fn quadratic_summand_with(
    part: &QuadraticForm,
    whole: &QuadraticForm,
    limits: &Limits,
) -> Result<Option<QuadraticForm>> {
    let (pw, pp) = (whole.underlying_pairing(), part.underlying_pairing());
    let mut odd = Vec::new();
    for p in odd_primes(whole.odd_part(), part.odd_part()) {
        match odd_complement(&pw.invariant_table_odd(p), &pp.invariant_table_odd(p))? {
            Some(w) => odd.extend_from_slice(w.odd_part()),
            None => return Ok(None),
        }
    }
    let family = CandidateFamily::new(&whole.quad_invariant_table_with(limits)?, &part.quad_invariant_table_with(limits)?)?;
    let w = match first_admissible(&family, limits)? {
        Some(t) => realize_quadratic_with(&t, limits)?,
        None => return Ok(None),
    };
    let witness = QuadraticForm::from_parts(w.two_part().to_vec(), odd);
    if !whole.is_isomorphic(&part.oplus(&witness))? {
        return Err(Error::Internal(format!("complement {witness} of {part} in {whole} does not check out")));
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::{Gen2, QGen2};

    fn a(k: u32, r: i64) -> Gen2 {
        Gen2::cyclic(k, r).unwrap()
    }

    fn pairing(gens: &[Gen2]) -> Pairing {
        Pairing::from_two(gens.iter().copied())
    }

    #[test]
    fn candidate_counts() {
        let fam = candidate_tables(&pairing(&[a(3, 1), a(3, 1)]), &pairing(&[a(3, 1)]));
        assert_eq!(fam.free_indices(), &[3]);
        assert_eq!(fam.len(), 9);
        assert_eq!(fam.candidates(&Limits::default()).unwrap().count(), 9);

        let e0 = pairing(&[Gen2::E0 { k: 2 }]);
        let fam = candidate_tables(&e0, &e0);
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.candidates(&Limits::default()).unwrap().collect::<Vec<_>>(), vec![SigTable::two()]);

        let whole = pairing(&[a(3, 1), a(4, 3), a(5, 1)]);
        let fam = candidate_tables(&whole, &pairing(&[a(4, 1)]));
        assert_eq!(fam.free_indices(), &[4]);
        assert_eq!(fam.len(), 9);
    }

    #[test]
    fn necessary_conditions() {
        let fam = candidate_tables(&pairing(&[a(3, 1)]), &pairing(&[a(4, 1)]));
        assert_eq!(fam.failure(), Some(NecessaryFailure::RankExceeds { index: 4 }));
        assert_eq!(fam.len(), 0);
        let fam = candidate_tables(&pairing(&[Gen2::E0 { k: 3 }]), &pairing(&[a(3, 1)]));
        assert_eq!(fam.failure(), Some(NecessaryFailure::InfinityNotInherited { index: 3 }));
    }

    #[test]
    fn too_many_free_indices() {
        let part = pairing(&(1..=9).map(|k| a(k, 1)).collect::<Vec<_>>());
        let fam = candidate_tables(&part.oplus(&part), &part);
        assert!(matches!(fam.candidates(&Limits::default()), Err(Error::Resource(_))));
    }

    #[test]
    fn doubled_cyclic() {
        let w = orthogonal_summand(&pairing(&[a(3, 1)]), &pairing(&[a(3, 1), a(3, 1)])).unwrap().unwrap();
        assert!(w.is_isomorphic(&pairing(&[a(3, 1)])));
    }

    #[test]
    fn connected_sum_of_three_lens_pairings() {
        let whole = pairing(&[a(3, 1), a(4, 1), a(5, 1)]);
        // A^4(1) itself is a factor; A^4(7) is the excluded residue.
        assert!(orthogonal_summand(&pairing(&[a(4, 1)]), &whole).unwrap().is_some());
        assert!(orthogonal_summand(&pairing(&[a(4, 3)]), &whole).unwrap().is_some());
        assert!(orthogonal_summand(&pairing(&[a(4, 5)]), &whole).unwrap().is_some());
        assert!(orthogonal_summand(&pairing(&[a(4, 7)]), &whole).unwrap().is_none());
    }

    #[test]
    fn trivial_parts() {
        let whole = Pairing::from_parts(vec![a(2, 3)], vec![GenOdd::from_unit(3, 1, 2).unwrap()]);
        assert_eq!(orthogonal_summand(&Pairing::new(), &whole).unwrap().unwrap(), whole);
        assert_eq!(orthogonal_summand(&whole, &whole).unwrap().unwrap(), Pairing::new());
    }

    #[test]
    fn odd_primes_use_the_rank_sign_rule() {
        let c = |u| GenOdd::from_unit(7, 1, u).unwrap();
        let whole = Pairing::from_odd([c(1), c(1)]);
        assert_eq!(orthogonal_summand(&Pairing::from_odd([c(1)]), &whole).unwrap(), Some(Pairing::from_odd([c(1)])));
        assert_eq!(orthogonal_summand(&Pairing::from_odd([c(3)]), &whole).unwrap(), Some(Pairing::from_odd([c(3)])));
        let single = Pairing::from_odd([c(1)]);
        assert_eq!(orthogonal_summand(&Pairing::from_odd([c(3)]), &single).unwrap(), None);
    }

    #[test]
    fn quadratic_examples() {
        let q1 = QuadraticForm::from_two([QGen2::QCyclic { k: 1, abar: 1 }]);
        let q3 = QuadraticForm::from_two([QGen2::QCyclic { k: 1, abar: 3 }]);
        let h = QuadraticForm::from_two([QGen2::QE0 { k: 1, alpha: 0, gamma: 0 }]);
        let w = quadratic_summand(&q1, &q1.oplus(&h)).unwrap().unwrap();
        let t = w.quad_invariant_table().unwrap();
        assert_eq!(t, SigTable::quadratic().with(1, 2, Z8Bar::ZERO).unwrap());
        assert_eq!(quadratic_summand(&q1, &q1).unwrap(), Some(QuadraticForm::new()));
        assert_eq!(quadratic_summand(&q1, &q3).unwrap(), None);
    }
}
