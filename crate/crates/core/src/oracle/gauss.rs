//! Gauss sums computed by enumerating the group, in exact cyclotomic arithmetic.

use crate::algebra::z8bar::Z8Bar;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::cyclotomic::CyclotomicSum;
use crate::oracle::gram::{GramPairing, GramQuadratic};

fn check_order(order: u128, bound: u128, what: &str) -> Result<()> {
    if order > bound {
        return Err(Error::Resource(format!("{what}: group order {order} exceeds the enumeration bound {bound}")));
    }
    Ok(())
}

fn log2_exact(n: u64) -> u32 {
    debug_assert!(n.is_power_of_two());
    n.trailing_zeros()
}

/// Histogram of `λ(x, x)` numerators over the 2-part.
fn self_value_histogram(g: &GramPairing) -> Vec<i64> {
    let mut hist = vec![0i64; g.modulus() as usize];
    g.for_each_element(|x| hist[g.self_value(x) as usize] += 1);
    hist
}

/// A zero sum able to hold `2^log_order`-th roots, with the factor by which
/// exponents must be scaled.
fn sum_for(log_order: u32) -> (CyclotomicSum, u64) {
    let sum = CyclotomicSum::zero(log_order);
    let scale = 1u64 << (sum.log_order() - log_order);
    (sum, scale)
}

fn arg_or_infinity(sum: &CyclotomicSum) -> Result<Z8Bar> {
    Ok(match sum.arg8()? {
        None => Z8Bar::Infinity,
        Some(s) => Z8Bar::Finite(s),
    })
}

/// `σ_k` for `k = 1..=levels` of the 2-part of `g`, from
/// `Γ_k = Σ_x exp(iπ 2^k λ(x, x))`.
pub fn gauss_levels_2(g: &GramPairing, levels: u32, limits: &Limits) -> Result<Vec<Z8Bar>> {
    let two = g.primary_part(2);
    check_order(two.order(), limits.max_sum_order, "Gauss sum")?;
    if two.rank() == 0 {
        return Ok(vec![Z8Bar::ZERO; levels as usize]);
    }
    let hist = self_value_histogram(&two);
    // exp(iπ 2^k v / N) = ζ_{2N}^{2^k v}
    let big = 2 * two.modulus();
    let log_order = log2_exact(big);
    (1..=levels)
        .map(|k| {
            let (mut sum, scale) = sum_for(log_order);
            let step = if k >= log_order { 0 } else { 1u128 << k };
            for (v, &c) in hist.iter().enumerate() {
                if c != 0 {
                    sum.add_root((step * v as u128 % big as u128) as u64 * scale, c);
                }
            }
            arg_or_infinity(&sum)
        })
        .collect()
}

/// `σ_k` of the 2-part of `g` by direct Gauss-sum evaluation.
pub fn gauss_sum_2(g: &GramPairing, k: u32, limits: &Limits) -> Result<Z8Bar> {
    if k == 0 {
        return Err(Error::InvalidInput("Gauss-sum levels start at 1".into()));
    }
    Ok(*gauss_levels_2(g, k, limits)?.last().expect("k >= 1"))
}

/// `σ_0` of the 2-part of `q`: the argument of `γ(q) = Σ_x exp(2πi q(x))`.
pub fn gauss_sum_quad(q: &GramQuadratic, limits: &Limits) -> Result<u8> {
    let two = q.primary_part(2);
    check_order(two.base().order(), limits.max_sum_order, "quadratic Gauss sum")?;
    quad_arg(&two)
}

pub(crate) fn quad_arg(two: &GramQuadratic) -> Result<u8> {
    if two.base().rank() == 0 {
        return Ok(0);
    }
    let big = 2 * two.base().modulus();
    let mut hist = vec![0i64; big as usize];
    two.base().for_each_element(|x| hist[two.value(x) as usize] += 1);
    let (mut sum, scale) = sum_for(log2_exact(big));
    for (v, &c) in hist.iter().enumerate() {
        if c != 0 {
            sum.add_root(v as u64 * scale, c);
        }
    }
    match sum.arg8()? {
        Some(s) => Ok(s),
        None => Err(Error::InvalidInput("quadratic Gauss sum vanishes, so the form is degenerate".into())),
    }
}
