//! Constructing a pairing or quadratic form with a prescribed invariant table.
//!
//! Levels are filled from the top down. Below level `l`, a generator at level
//! `l` only contributes through two residues mod 8: its value at odd gaps and
//! at even gaps. The contribution of everything above the current level is
//! therefore a point of `(Z/8)^4` (odd-gap and even-gap sums, split by the
//! parity of the level), and an exact search over that state space decides
//! which level blocks lead to the prescribed signatures.

use crate::algebra::generator::{Gen2, GenOdd, QGen2, MAX_LEVEL};
use crate::algebra::pairing::Pairing;
use crate::algebra::quadratic::{generator_sigma0, QuadraticForm};
use crate::algebra::z8bar::{Sign, Z8Bar};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tables::{check_admissible, check_admissible_odd, AnyTable, Flavor, OddTable, SigTable};

/// Cyclic residues available at level `k`, in canonical form.
fn residues(k: u32) -> &'static [u64] {
    match k {
        1 => &[1],
        2 => &[1, 3],
        _ => &[1, 3, 5, 7],
    }
}

/// The generators placed at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Block {
    /// Multiplicity of `A^k(a)` for each residue of `residues(k)`.
    cyclic: Vec<u32>,
    e0: u32,
    e1: u32,
}

impl Block {
    fn empty() -> Block {
        Block { cyclic: Vec::new(), e0: 0, e1: 0 }
    }

    fn has_cyclic(&self) -> bool {
        self.cyclic.iter().any(|&n| n > 0)
    }

    /// Contribution to `σ_j` for `j` below the level: `(odd gap, even gap)`.
    fn effect(&self, k: u32) -> (u8, u8) {
        let mut odd = 4 * (self.e1 % 2) as u64;
        let mut even = 0u64;
        for (&a, &n) in residues(k).iter().zip(&self.cyclic) {
            let n = n as u64 % 8;
            odd += n * if a % 4 == 1 { 1 } else { 7 };
            even += n * a;
        }
        ((odd % 8) as u8, (even % 8) as u8)
    }

    fn generators(&self, k: u32) -> Vec<Gen2> {
        let mut out = Vec::new();
        for (&a, &n) in residues(k).iter().zip(&self.cyclic) {
            out.extend(std::iter::repeat_n(Gen2::Cyclic { k, a }, n as usize));
        }
        out.extend(std::iter::repeat_n(Gen2::E0 { k }, self.e0 as usize));
        out.extend(std::iter::repeat_n(Gen2::E1 { k }, self.e1 as usize));
        out
    }
}

/// Candidate blocks of rank `r` at level `k`, in order of preference and with
/// one representative per distinct effect.
///
/// Multiplicities only matter mod 8, and `c` cyclic factors can emulate any
/// choice of `c - 8` of them, so it suffices to let non-unit residues occur at
/// most 7 times and the cyclic count range over `r, r-2, r-4, r-6`.
fn candidates(k: u32, r: u32, s: Z8Bar) -> Vec<Block> {
    if r == 0 {
        return vec![Block::empty()];
    }
    let classes = residues(k).len();
    let mut out: Vec<Block> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |b: Block, out: &mut Vec<Block>| {
        if seen.insert((b.has_cyclic(), b.effect(k))) {
            out.push(b);
        }
    };
    let counts: Vec<u32> = if s.is_infinite() {
        (0..4).map(|i| r as i64 - 2 * i).filter(|&c| c >= 1).map(|c| c as u32).collect()
    } else if r % 2 == 0 {
        vec![0]
    } else {
        Vec::new()
    };
    for c in counts {
        let pairs = (r - c) / 2;
        let e1_options: &[u32] = if pairs >= 1 && k >= 2 { &[0, 1] } else { &[0] };
        for &e1 in e1_options {
            let mut dists: Vec<Vec<u32>> = Vec::new();
            let others = classes - 1;
            let bound = c.min(7);
            let mut v = vec![0u32; others];
            loop {
                let used: u32 = v.iter().sum();
                if used <= c {
                    let mut d = vec![c - used];
                    d.extend_from_slice(&v);
                    dists.push(d);
                }
                let mut i = 0;
                loop {
                    if i == others {
                        break;
                    }
                    v[i] += 1;
                    if v[i] <= bound {
                        break;
                    }
                    v[i] = 0;
                    i += 1;
                }
                if i == others {
                    break;
                }
            }
            dists.sort_by_key(|d| (d[1..].iter().sum::<u32>(), d[1..].to_vec()));
            for d in dists {
                push(Block { cyclic: d, e0: pairs - e1, e1 }, &mut out);
            }
        }
    }
    out
}

/// Packed `(odd-gap sum, even-gap sum)` per level parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct State([u8; 4]);

impl State {
    fn index(self) -> usize {
        self.0.iter().fold(0, |acc, &v| acc * 8 + v as usize)
    }

    fn from_index(mut i: usize) -> State {
        let mut v = [0u8; 4];
        for slot in v.iter_mut().rev() {
            *slot = (i % 8) as u8;
            i /= 8;
        }
        State(v)
    }

    /// `σ_k` contributed by all levels above `k`.
    fn sigma(self, k: u32) -> u8 {
        let p = (k % 2) as usize;
        (self.0[1 - p] + self.0[2 + p]) % 8
    }

    fn after(self, k: u32, (odd, even): (u8, u8)) -> State {
        let p = (k % 2) as usize;
        let mut v = self.0;
        v[p] = (v[p] + odd) % 8;
        v[2 + p] = (v[2 + p] + even) % 8;
        State(v)
    }
}

const STATES: usize = 8 * 8 * 8 * 8;

fn block_fits(b: &Block, state: State, k: u32, s: Z8Bar) -> bool {
    if b.has_cyclic() {
        s.is_infinite()
    } else {
        s == Z8Bar::Finite(state.sigma(k))
    }
}

/// Some pairing on a 2-group whose invariant table is `t`, found by exact
/// search and without consulting the admissibility criterion; `None` if no
/// pairing has this table.
pub fn find_realization(t: &SigTable) -> Result<Option<Pairing>> {
    let top = t.max_index().unwrap_or(0);
    if top > MAX_LEVEL {
        return Err(Error::InvalidInput(format!("index {top} exceeds the supported maximum level {MAX_LEVEL}")));
    }
    if t.flavor() == Flavor::Quadratic {
        return Err(Error::InvalidInput("quadratic tables are realized by realize_quadratic".into()));
    }
    let cands: Vec<Vec<Block>> = (0..=top).map(|k| if k == 0 { Vec::new() } else { candidates(k, t.rank(k), t.sig(k)) }).collect();

    // feasible[k][state]: levels k, k-1, ..., 1 can be filled from `state`.
    let mut feasible = vec![vec![true; STATES]];
    for k in 1..=top {
        let below = &feasible[k as usize - 1];
        let row: Vec<bool> = (0..STATES)
            .map(|i| {
                let st = State::from_index(i);
                cands[k as usize]
                    .iter()
                    .any(|b| block_fits(b, st, k, t.sig(k)) && below[st.after(k, b.effect(k)).index()])
            })
            .collect();
        feasible.push(row);
    }
    let mut state = State([0; 4]);
    if !feasible[top as usize][state.index()] {
        return Ok(None);
    }
    let mut gens = Vec::new();
    for k in (1..=top).rev() {
        let b = cands[k as usize]
            .iter()
            .find(|b| block_fits(b, state, k, t.sig(k)) && feasible[k as usize - 1][state.after(k, b.effect(k)).index()])
            .expect("feasibility was established");
        state = state.after(k, b.effect(k));
        gens.extend(b.generators(k));
    }
    Ok(Some(Pairing::from_two(gens)))
}

/// A pairing on a 2-group realizing an admissible flavor-two table.
pub fn realize_two(t: &SigTable) -> Result<Pairing> {
    if t.flavor() != Flavor::Two {
        return Err(Error::FlavorMismatch(t.flavor().to_string(), Flavor::Two.to_string()));
    }
    let report = check_admissible(t);
    if !report.verdict {
        return Err(Error::Inadmissible(report));
    }
    let x = find_realization(t)?
        .ok_or_else(|| Error::Internal(format!("admissible table {t} has no realization")))?;
    if x.invariant_table_two() != *t {
        return Err(Error::Internal(format!("realization {x} does not reproduce {t}")));
    }
    Ok(x)
}

/// A pairing on a `p`-group realizing an admissible odd table: at each level,
/// `r - 1` copies of `C(+1)` and one copy of `C(s)`.
pub fn realize_odd(t: &OddTable) -> Result<Pairing> {
    let Flavor::Odd(p) = t.flavor() else {
        return Err(Error::FlavorMismatch(t.flavor().to_string(), "odd".into()));
    };
    let report = check_admissible_odd(t);
    if !report.verdict {
        return Err(Error::Inadmissible(report));
    }
    let mut gens = Vec::new();
    for (k, r, s) in t.entries() {
        if r == 0 {
            continue;
        }
        for _ in 1..r {
            gens.push(GenOdd::new(p, k, Sign::Plus)?);
        }
        gens.push(GenOdd::new(p, k, s)?);
    }
    let x = Pairing::from_odd(gens);
    if x.invariant_table_odd(p) != *t {
        return Err(Error::Internal(format!("realization {x} does not reproduce {t}")));
    }
    Ok(x)
}

pub fn realize(t: &AnyTable) -> Result<Pairing> {
    match t {
        AnyTable::Sig(s) => realize_two(s),
        AnyTable::Odd(o) => realize_odd(o),
    }
}

/// A quadratic form realizing an admissible quadratic table.
///
/// The pairing part is realized first; every homogeneous refinement of a
/// generator sum is a sum of generator refinements, so a search over
/// per-generator refinements reaches every attainable `σ_0`.
pub fn realize_quadratic(t: &SigTable) -> Result<QuadraticForm> {
    realize_quadratic_with(t, &Limits::default())
}

pub fn realize_quadratic_with(t: &SigTable, limits: &Limits) -> Result<QuadraticForm> {
    if t.flavor() != Flavor::Quadratic {
        return Err(Error::FlavorMismatch(t.flavor().to_string(), Flavor::Quadratic.to_string()));
    }
    let report = check_admissible(t);
    if !report.verdict {
        return Err(Error::Inadmissible(report));
    }
    let target = t.sig(0).finite().expect("admissible quadratic tables have finite s(0)");
    let base = t.restricted(1, Flavor::Two);
    let x = find_realization(&base)?
        .ok_or_else(|| Error::Internal(format!("pairing part of admissible table {t} has no realization")))?;

    let options: Vec<Vec<(QGen2, u8)>> = x
        .two_part()
        .iter()
        .map(|&g| {
            QGen2::lift(g).refinements().into_iter().map(|q| Ok((q, generator_sigma0(q, limits)?))).collect()
        })
        .collect::<Result<_>>()?;
    // reach[i][s]: generators i.. can contribute s.
    let n = options.len();
    let mut reach = vec![[false; 8]; n + 1];
    reach[n][0] = true;
    for i in (0..n).rev() {
        for s in 0..8 {
            reach[i][s] = options[i].iter().any(|&(_, v)| reach[i + 1][(s + 8 - v as usize) % 8]);
        }
    }
    if !reach[0][target as usize] {
        return Err(Error::Internal(format!("no refinement of {x} attains s(0) = {target}")));
    }
    let mut need = target as usize;
    let mut gens = Vec::with_capacity(n);
    for (i, opts) in options.iter().enumerate() {
        let &(q, v) = opts
            .iter()
            .find(|&&(_, v)| reach[i + 1][(need + 8 - v as usize) % 8])
            .expect("reachability was established");
        need = (need + 8 - v as usize) % 8;
        gens.push(q);
    }
    let q = QuadraticForm::from_two(gens);
    if q.quad_invariant_table_with(limits)? != *t {
        return Err(Error::Internal(format!("realization {q} does not reproduce {t}")));
    }
    Ok(q)
}
