//! Block-diagonal Gram presentations of generator sums.

use crate::algebra::generator::{Gen2, GenOdd, QGen2};
use crate::algebra::pairing::Pairing;
use crate::algebra::quadratic::QuadraticForm;
use crate::oracle::gram::{GramPairing, GramQuadratic};

fn block(orders: Vec<u64>, modulus: u64, nums: Vec<Vec<u64>>) -> GramPairing {
    GramPairing::from_numerators(orders, modulus, nums).expect("generator blocks are valid Gram data")
}

pub fn gram_of_gen2(g: Gen2) -> GramPairing {
    let m = 1u64 << g.level();
    match g {
        Gen2::Cyclic { a, .. } => block(vec![m], m, vec![vec![a % m]]),
        Gen2::E0 { .. } => block(vec![m, m], m, vec![vec![0, 1], vec![1, 0]]),
        Gen2::E1 { .. } => block(vec![m, m], m, vec![vec![2, 1], vec![1, 2]]),
    }
}

pub fn gram_of_odd(g: GenOdd) -> GramPairing {
    let m = g.order();
    block(vec![m], m, vec![vec![g.unit() % m]])
}

pub fn gram_of_qgen2(g: QGen2) -> GramQuadratic {
    let k = g.level();
    let half = 1u64 << k;
    // The polarization of abar x²/2^(k+1) is abar/2^k with the full residue,
    // not the canonical one stored in the underlying generator.
    let base = match g {
        QGen2::QCyclic { abar, .. } => block(vec![half], half, vec![vec![abar % half]]),
        _ => gram_of_gen2(g.underlying()),
    };
    // Numerators over 2^(k+1).
    let qnums = match g {
        QGen2::QCyclic { abar, .. } => vec![abar],
        QGen2::QE0 { alpha, gamma, .. } => vec![alpha as u64 * half, gamma as u64 * half],
        QGen2::QE1 { alpha, gamma, .. } => vec![2 + alpha as u64 * half, 2 + gamma as u64 * half],
    };
    GramQuadratic::from_numerators(base, qnums).expect("generator refinements are consistent")
}

/// The unique homogeneous refinement `q(x) = c λ(x, x)`, `2c ≡ 1`.
pub fn gram_of_odd_quadratic(g: GenOdd) -> GramQuadratic {
    let m = g.order();
    let qnum = (g.unit() as u128 * (m as u128 + 1) % (2 * m as u128)) as u64;
    GramQuadratic::from_numerators(gram_of_odd(g), vec![qnum]).expect("odd refinement is consistent")
}

pub fn gram_of_pairing(x: &Pairing) -> GramPairing {
    let blocks = x.two_part().iter().map(|&g| gram_of_gen2(g)).chain(x.odd_part().iter().map(|&g| gram_of_odd(g)));
    blocks.fold(GramPairing::empty(), |acc, b| acc.block_sum(&b))
}

pub fn gram_of_quadratic(q: &QuadraticForm) -> GramQuadratic {
    let blocks = q
        .two_part()
        .iter()
        .map(|&g| gram_of_qgen2(g))
        .chain(q.odd_part().iter().map(|&g| gram_of_odd_quadratic(g)));
    blocks.fold(GramQuadratic::empty(), |acc, b| acc.block_sum(&b))
}
