//! Exhaustive isomorphism search between small explicit pairings.

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::gram::{GramPairing, GramQuadratic};

/// Multiset of prime-power cyclic factors, which determines the group.
fn group_type(orders: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = orders
        .iter()
        .flat_map(|&d| factorize(d).into_iter().map(|(p, a)| p.pow(a)))
        .filter(|&q| q > 1)
        .collect();
    out.sort();
    out
}

struct Search<'a> {
    src: &'a GramPairing,
    dst: &'a GramPairing,
    src_q: Option<&'a GramQuadratic>,
    dst_q: Option<&'a GramQuadratic>,
    elements: Vec<Vec<u64>>,
    images: Vec<usize>,
}

impl Search<'_> {
    /// Numerators compare directly: isomorphic groups share their exponent.
    fn admissible_image(&self, i: usize, y: &[u64]) -> bool {
        let d = self.src.orders()[i];
        if y.iter().zip(self.dst.orders()).any(|(&c, &m)| (c as u128 * d as u128) % m as u128 != 0) {
            return false;
        }
        if self.dst.self_value(y) != self.src.entry(i, i) {
            return false;
        }
        if let (Some(sq), Some(dq)) = (self.src_q, self.dst_q) {
            if dq.value(y) != sq.qnum(i) {
                return false;
            }
        }
        self.images
            .iter()
            .enumerate()
            .all(|(j, &img)| self.dst.value(y, &self.elements[img]) == self.src.entry(i, j))
    }

    fn run(&mut self) -> bool {
        let i = self.images.len();
        if i == self.src.rank() {
            return true;
        }
        for idx in 0..self.elements.len() {
            if self.admissible_image(i, &self.elements[idx]) {
                self.images.push(idx);
                if self.run() {
                    return true;
                }
                self.images.pop();
            }
        }
        false
    }
}

fn search(
    g1: &GramPairing,
    g2: &GramPairing,
    q: Option<(&GramQuadratic, &GramQuadratic)>,
    limits: &Limits,
) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > limits.max_iso_order {
            return Err(Error::Resource(format!(
                "isomorphism search: group order {} exceeds the bound {}",
                g.order(),
                limits.max_iso_order
            )));
        }
    }
    if group_type(g1.orders()) != group_type(g2.orders()) {
        return Ok(false);
    }
    if !g1.nondegenerate() || !g2.nondegenerate() {
        return Err(Error::InvalidInput("isomorphism search needs nondegenerate pairings".into()));
    }
    let mut elements = Vec::new();
    g2.for_each_element(|x| elements.push(x.to_vec()));
    let mut s = Search {
        src: g1,
        dst: g2,
        src_q: q.map(|(a, _)| a),
        dst_q: q.map(|(_, b)| b),
        elements,
        images: Vec::new(),
    };
    // A pairing-preserving homomorphism out of a nondegenerate pairing is
    // injective, hence bijective between groups of equal order.
    Ok(s.run())
}

/// Whether some group isomorphism carries `g1` onto `g2`.
pub fn brute_isomorphic(g1: &GramPairing, g2: &GramPairing, limits: &Limits) -> Result<bool> {
    search(g1, g2, None, limits)
}

/// Whether some group isomorphism carries `q1` onto `q2`.
pub fn brute_isomorphic_quad(q1: &GramQuadratic, q2: &GramQuadratic, limits: &Limits) -> Result<bool> {
    search(q1.base(), q2.base(), Some((q1, q2)), limits)
}
