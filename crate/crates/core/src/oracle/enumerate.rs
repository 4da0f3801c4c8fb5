//! Exhaustive enumeration of pairings and quadratic refinements on a presented group.

use crate::arith::{gcd, lcm};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::gram::{for_each_vector, GramPairing, GramQuadratic};

/// Every nondegenerate pairing on `Z/d_1 ⊕ … ⊕ Z/d_n`, in a fixed order.
///
/// Entries range over `t / gcd(d_i, d_j)` (upper triangle, row-major, last
/// entry fastest).
pub fn enumerate_pairings(orders: &[u64], limits: &Limits) -> Result<Vec<GramPairing>> {
    if orders.iter().any(|&d| d < 2) {
        return Err(Error::InvalidGram("cyclic orders must be at least 2".into()));
    }
    let order: u128 = orders.iter().map(|&d| d as u128).product();
    if order > limits.max_sum_order {
        return Err(Error::Resource(format!("enumeration: group order {order} exceeds the bound {}", limits.max_sum_order)));
    }
    let n = orders.len();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let ranges: Vec<u64> = slots.iter().map(|&(i, j)| gcd(orders[i], orders[j])).collect();
    let count: u128 = ranges.iter().map(|&r| r as u128).product();
    if count > limits.max_enumerated_matrices {
        return Err(Error::Resource(format!(
            "enumeration: {count} matrices exceed the bound {}",
            limits.max_enumerated_matrices
        )));
    }
    let modulus = orders.iter().fold(1, |acc, &d| lcm(acc, d));
    let mut out = Vec::new();
    let mut failure = None;
    for_each_vector(&ranges, &mut |choice: &[u64]| {
        if failure.is_some() {
            return;
        }
        let mut nums = vec![vec![0u64; n]; n];
        for (s, &(i, j)) in slots.iter().enumerate() {
            let v = choice[s] * (modulus / ranges[s]);
            nums[i][j] = v;
            nums[j][i] = v;
        }
        match GramPairing::from_numerators(orders.to_vec(), modulus, nums) {
            Ok(g) if g.nondegenerate() => out.push(g),
            Ok(_) => {}
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Every homogeneous quadratic refinement of `base`: each `q(e_i)` ranges
/// over the two solutions of `2 q(e_i) = B_ii` compatible with `d_i² q(e_i) = 0`.
pub fn enumerate_refinements(base: &GramPairing) -> Vec<GramQuadratic> {
    let big = 2 * base.modulus();
    let options: Vec<Vec<u64>> = (0..base.rank())
        .map(|i| {
            let b = base.entry(i, i);
            [b, b + base.modulus()]
                .into_iter()
                .map(|q| q % big)
                .filter(|&q| {
                    let d = base.orders()[i] as u128;
                    d * d * q as u128 % big as u128 == 0
                })
                .collect()
        })
        .collect();
    let sizes: Vec<u64> = options.iter().map(|o| o.len() as u64).collect();
    if sizes.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for_each_vector(&sizes, &mut |choice: &[u64]| {
        let qnums = choice.iter().enumerate().map(|(i, &c)| options[i][c as usize]).collect();
        if let Ok(q) = GramQuadratic::from_numerators(base.clone(), qnums) {
            out.push(q);
        }
    });
    out
}
