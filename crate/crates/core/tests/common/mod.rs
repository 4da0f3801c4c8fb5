//! Shared test helpers: seeded random generator sums and naive search oracles
//! that enumerate generator multisets directly.

#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use linkform::{Gen2, GenOdd, Pairing, QGen2, QuadraticForm, Sign, SigTable, Z8Bar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_gen2(rng: &mut impl Rng, max_level: u32) -> Gen2 {
    let k = rng.gen_range(1..=max_level);
    match rng.gen_range(0..4) {
        0 | 1 => Gen2::cyclic(k, 2 * rng.gen_range(0..4) + 1).unwrap(),
        2 => Gen2::e0(k).unwrap(),
        _ if k >= 2 => Gen2::e1(k).unwrap(),
        _ => Gen2::e0(k).unwrap(),
    }
}

/// A random sum of 2-adic generators with `|G| <= 2^max_log`.
pub fn random_two(rng: &mut impl Rng, max_log: u32, max_level: u32) -> Pairing {
    let budget = rng.gen_range(0..=max_log);
    let mut used = 0;
    let mut gens = Vec::new();
    for _ in 0..16 {
        let g = random_gen2(rng, max_level);
        let cost = g.level() * g.rank();
        if used + cost <= budget {
            used += cost;
            gens.push(g);
        }
    }
    Pairing::from_two(gens)
}

pub fn random_odd(rng: &mut impl Rng, count: usize) -> Vec<GenOdd> {
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(0..=count) {
        let (p, k) = [(3, 1), (3, 2), (5, 1), (7, 1), (3, 3)][rng.gen_range(0..5)];
        let eps = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        out.push(GenOdd::new(p, k, eps).unwrap());
    }
    out
}

pub fn random_qgen2(rng: &mut impl Rng, max_level: u32) -> QGen2 {
    let k = rng.gen_range(1..=max_level);
    let (a, c) = (rng.gen_range(0..2), rng.gen_range(0..2));
    match rng.gen_range(0..4) {
        0 | 1 => QGen2::cyclic(k, 2 * rng.gen_range(0..(1i64 << k)) + 1).unwrap(),
        2 => QGen2::e0(k, a, c).unwrap(),
        _ if k >= 2 => QGen2::e1(k, a, c).unwrap(),
        _ => QGen2::e0(k, a, c).unwrap(),
    }
}

/// A random sum of quadratic 2-adic generators with `|G| <= 2^max_log`.
pub fn random_quadratic(rng: &mut impl Rng, max_log: u32, max_level: u32) -> QuadraticForm {
    let budget = rng.gen_range(0..=max_log);
    let mut used = 0;
    let mut gens = Vec::new();
    for _ in 0..16 {
        let g = random_qgen2(rng, max_level);
        let cost = g.level() * g.underlying().rank();
        if used + cost <= budget {
            used += cost;
            gens.push(g);
        }
    }
    QuadraticForm::from_two(gens)
}

/// Residues of the cyclic generators at level `k`.
pub fn residues(k: u32) -> Vec<i64> {
    match k {
        1 => vec![1],
        2 => vec![1, 3],
        _ => vec![1, 3, 5, 7],
    }
}

fn multisets<T: Clone>(items: &[T], size: usize) -> Vec<Vec<T>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let Some((first, rest)) = items.split_first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for take in 0..=size {
        for mut tail in multisets(rest, size - take) {
            let mut m = vec![first.clone(); take];
            m.append(&mut tail);
            out.push(m);
        }
    }
    out
}

/// Every multiset of level-`k` generators with total rank `r`.
pub fn level_multisets(k: u32, r: u32) -> Vec<Vec<Gen2>> {
    let cyclic: Vec<Gen2> = residues(k).into_iter().map(|a| Gen2::cyclic(k, a).unwrap()).collect();
    let mut planes = vec![Gen2::e0(k).unwrap()];
    if k >= 2 {
        planes.push(Gen2::e1(k).unwrap());
    }
    let mut out = Vec::new();
    for h in 0..=r / 2 {
        let c = (r - 2 * h) as usize;
        for cs in multisets(&cyclic, c) {
            for hs in multisets(&planes, h as usize) {
                out.push(cs.iter().chain(hs.iter()).copied().collect());
            }
        }
    }
    out
}

type Entries = Vec<(u32, u32, Z8Bar)>;

thread_local! {
    static LEVEL_TABLES: RefCell<HashMap<(u32, u32), BTreeSet<Entries>>> = RefCell::new(HashMap::new());
}

/// Distinct invariant tables of level-`k` generator sums of rank `r`.
pub fn level_tables(k: u32, r: u32) -> BTreeSet<Entries> {
    LEVEL_TABLES.with(|cache| {
        cache
            .borrow_mut()
            .entry((k, r))
            .or_insert_with(|| {
                level_multisets(k, r)
                    .into_iter()
                    .map(|gens| Pairing::from_two(gens).invariant_table_two().entries().collect())
                    .collect()
            })
            .clone()
    })
}

fn table_of(entries: &[(u32, u32, Z8Bar)]) -> SigTable {
    let mut t = SigTable::two();
    for &(k, r, s) in entries {
        t.set(k, r, s).unwrap();
    }
    t
}

/// All invariant tables of 2-adic generator sums with the given level ranks.
pub fn tables_with_ranks(ranks: &BTreeMap<u32, u32>) -> Vec<SigTable> {
    let mut acc: BTreeSet<Entries> = BTreeSet::from([Vec::new()]);
    for (&k, &r) in ranks {
        let pieces = level_tables(k, r);
        let mut next = BTreeSet::new();
        for a in &acc {
            for b in &pieces {
                let t = table_of(a).table_sum(&table_of(b)).unwrap();
                next.insert(t.entries().collect::<Vec<_>>());
            }
        }
        acc = next;
    }
    acc.into_iter().map(|e| table_of(&e)).collect()
}

fn two_ranks(x: &Pairing) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for g in x.two_part() {
        *m.entry(g.level()).or_insert(0) += g.rank();
    }
    m
}

fn odd_ranks(x: &Pairing) -> BTreeMap<(u64, u32), u32> {
    let mut m = BTreeMap::new();
    for g in x.odd_part() {
        *m.entry((g.p, g.k)).or_insert(0) += 1;
    }
    m
}

/// Whether some generator sum `μ` has `part ⊕ μ` with the invariants of `whole`.
pub fn brute_summand(part: &Pairing, whole: &Pairing) -> bool {
    let (pw, ww) = (two_ranks(part), two_ranks(whole));
    let mut need = BTreeMap::new();
    for (&k, &r) in &ww {
        let p = pw.get(&k).copied().unwrap_or(0);
        if p > r {
            return false;
        }
        if r > p {
            need.insert(k, r - p);
        }
    }
    if pw.keys().any(|k| !ww.contains_key(k)) {
        return false;
    }
    let (po, wo) = (odd_ranks(part), odd_ranks(whole));
    if po.iter().any(|(key, &r)| wo.get(key).copied().unwrap_or(0) < r) {
        return false;
    }
    // Odd levels: the complement's signs multiply freely, except that an
    // empty complement contributes +1.
    for (&(p, k), &r) in &wo {
        let rp = po.get(&(p, k)).copied().unwrap_or(0);
        if rp == r && part.sigma_odd(p, k) != whole.sigma_odd(p, k) {
            return false;
        }
    }
    let base = part.invariant_table_two();
    let target = whole.invariant_table_two();
    tables_with_ranks(&need).iter().any(|t| base.table_sum(t).unwrap() == target)
}
