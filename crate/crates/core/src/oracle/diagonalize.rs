//! Splitting an odd-primary pairing into cyclic orthogonal summands.

use crate::algebra::generator::GenOdd;
use crate::algebra::z8bar::Sign;
use crate::arith::{gcd, is_prime, legendre, valuation};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::gram::GramPairing;

/// Cyclic decomposition of the `p`-part of `g`.
///
/// Repeatedly takes the first element (in lexicographic coordinate order) on
/// which `λ(x, x)` has maximal order, splits off `<x>` and continues on its
/// orthogonal complement.
pub fn diagonalize_odd(g: &GramPairing, p: u64, limits: &Limits) -> Result<Vec<GenOdd>> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    let part = g.primary_part(p);
    if part.order() > limits.max_sum_order {
        return Err(Error::Resource(format!(
            "decomposition: group order {} exceeds the enumeration bound {}",
            part.order(),
            limits.max_sum_order
        )));
    }
    if part.rank() == 0 {
        return Ok(Vec::new());
    }
    let n = part.modulus();
    let mut elements: Vec<Vec<u64>> = Vec::with_capacity(part.order() as usize);
    part.for_each_element(|x| elements.push(x.to_vec()));

    let mut out = Vec::new();
    while elements.len() > 1 {
        let mut best: Option<(u64, &Vec<u64>)> = None;
        for x in &elements {
            let v = part.self_value(x);
            let order = n / gcd(v, n);
            if best.is_none_or(|(o, _)| order > o) {
                best = Some((order, x));
            }
        }
        let (order, x) = best.expect("nonempty");
        if order == 1 {
            return Err(Error::Internal("no element with nonzero self-linking in an odd-primary pairing".into()));
        }
        let level = valuation(order, p);
        // λ(x, x) = u / p^level with u a unit.
        let u = part.self_value(x) / (n / order);
        let eps = Sign::from_i8(legendre(u as i64, p)).ok_or_else(|| Error::Internal("non-unit self-linking".into()))?;
        out.push(GenOdd::new(p, level, eps)?);
        let x = x.clone();
        let before = elements.len() as u64;
        elements.retain(|y| part.value(&x, y) == 0);
        if before != order * elements.len() as u64 {
            return Err(Error::Internal("orthogonal complement has the wrong order".into()));
        }
    }
    out.sort();
    Ok(out)
}
