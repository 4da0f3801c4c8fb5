//! Explicit linking pairings and quadratic forms on presented groups
//! `Z/d_1 ⊕ … ⊕ Z/d_n`.

use crate::arith::{gcd, lcm, valuation};
use crate::error::{Error, Result};
use crate::oracle::snf::invariant_factors;

/// A symmetric bilinear form `B_ij = num_ij / N mod 1`, `N` the exponent of
/// the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramPairing {
    orders: Vec<u64>,
    modulus: u64,
    nums: Vec<Vec<u64>>,
}

/// A reduced rational `num/den` taken mod 1.
pub fn reduce_mod1(num: i64, den: u64) -> Result<(u64, u64)> {
    if den == 0 {
        return Err(Error::InvalidGram("zero denominator".into()));
    }
    let n = num.rem_euclid(den as i64) as u64;
    let g = gcd(n, den);
    Ok((n / g, den / g))
}

impl GramPairing {
    /// Builds a pairing from reduced rationals `(num, den)`; entries are taken
    /// mod 1 and checked for symmetry and `d_i B_ij ∈ Z`.
    pub fn from_rationals(orders: Vec<u64>, gram: &[Vec<(i64, u64)>]) -> Result<Self> {
        let n = orders.len();
        if orders.iter().any(|&d| d < 2) {
            return Err(Error::InvalidGram("cyclic orders must be at least 2".into()));
        }
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGram(format!("gram matrix must be {n}x{n}")));
        }
        let modulus = orders.iter().fold(1, |acc, &d| lcm(acc, d));
        let mut nums = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (num, den) = reduce_mod1(gram[i][j].0, gram[i][j].1)?;
                if orders[i] % den != 0 || orders[j] % den != 0 {
                    return Err(Error::InvalidGram(format!(
                        "entry ({i},{j}) = {num}/{den} is incompatible with orders {} and {}",
                        orders[i], orders[j]
                    )));
                }
                nums[i][j] = num * (modulus / den);
            }
        }
        for i in 0..n {
            for j in 0..i {
                if nums[i][j] != nums[j][i] {
                    return Err(Error::InvalidGram(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(GramPairing { orders, modulus, nums })
    }

    /// Builds a pairing from numerators over `modulus` (a multiple of every order).
    pub fn from_numerators(orders: Vec<u64>, modulus: u64, nums: Vec<Vec<u64>>) -> Result<Self> {
        let gram: Vec<Vec<(i64, u64)>> =
            nums.iter().map(|row| row.iter().map(|&v| (v as i64, modulus)).collect()).collect();
        GramPairing::from_rationals(orders, &gram)
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Numerator of `B_ij` over the modulus.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.nums[i][j]
    }

    /// `B_ij` as a reduced rational.
    pub fn entry_rational(&self, i: usize, j: usize) -> (u64, u64) {
        let g = gcd(self.nums[i][j], self.modulus);
        (self.nums[i][j] / g, self.modulus / g)
    }

    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&d| d as u128).product()
    }

    /// Numerator of `λ(x, y)` over the modulus.
    pub fn value(&self, x: &[u64], y: &[u64]) -> u64 {
        let n = self.modulus as u128;
        let mut acc: u128 = 0;
        for i in 0..self.rank() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                acc = (acc + x[i] as u128 * y[j] as u128 % n * self.nums[i][j] as u128) % n;
            }
        }
        acc as u64
    }

    /// Numerator of `λ(x, x)` over the modulus.
    pub fn self_value(&self, x: &[u64]) -> u64 {
        self.value(x, x)
    }

    /// Whether the adjoint `G → Hom(G, Q/Z)` is bijective.
    ///
    /// With `C_ij = d_j B_ij` the adjoint reads `x ↦ xC` on `Z^n / DZ^n`;
    /// since source and target have the same order it suffices that the rows
    /// of `C` and `D` span `Z^n`, i.e. every invariant factor of `[C; D]` is 1.
    pub fn nondegenerate(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return true;
        }
        let mut m: Vec<Vec<i128>> = Vec::with_capacity(2 * n);
        for i in 0..n {
            m.push(
                (0..n)
                    .map(|j| (self.nums[i][j] as i128 * self.orders[j] as i128) / self.modulus as i128)
                    .collect(),
            );
        }
        for i in 0..n {
            m.push((0..n).map(|j| if i == j { self.orders[i] as i128 } else { 0 }).collect());
        }
        invariant_factors(m).iter().all(|&d| d == 1)
    }

    /// Orthogonal block sum.
    pub fn block_sum(&self, other: &GramPairing) -> GramPairing {
        let modulus = lcm(self.modulus, other.modulus);
        let (a, b) = (self.rank(), other.rank());
        let mut nums = vec![vec![0u64; a + b]; a + b];
        for i in 0..a {
            for j in 0..a {
                nums[i][j] = self.nums[i][j] * (modulus / self.modulus);
            }
        }
        for i in 0..b {
            for j in 0..b {
                nums[a + i][a + j] = other.nums[i][j] * (modulus / other.modulus);
            }
        }
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        GramPairing { orders, modulus, nums }
    }

    pub fn empty() -> GramPairing {
        GramPairing { orders: Vec::new(), modulus: 1, nums: Vec::new() }
    }

    /// Generators of the `p`-primary part: `(d_i / p^a_i) e_i` for each `i`
    /// with `a_i = v_p(d_i) > 0`. Returns the new pairing and, per new
    /// generator, the multiplier and source index.
    pub fn primary_part(&self, p: u64) -> GramPairing {
        let picks: Vec<(usize, u64, u64)> = (0..self.rank())
            .filter_map(|i| {
                let a = valuation(self.orders[i], p);
                (a > 0).then(|| {
                    let pa = p.pow(a);
                    (i, self.orders[i] / pa, pa)
                })
            })
            .collect();
        let orders: Vec<u64> = picks.iter().map(|&(_, _, pa)| pa).collect();
        if orders.is_empty() {
            return GramPairing::empty();
        }
        let modulus = orders.iter().fold(1, |acc, &d| lcm(acc, d));
        let n = self.modulus as u128;
        let nums = picks
            .iter()
            .map(|&(i, ci, _)| {
                picks
                    .iter()
                    .map(|&(j, cj, _)| {
                        let v = (self.nums[i][j] as u128 * ci as u128 % n) * cj as u128 % n;
                        // v / N has denominator dividing the p-part modulus.
                        (v * modulus as u128 / n) as u64 % modulus
                    })
                    .collect()
            })
            .collect();
        GramPairing { orders, modulus, nums }
    }

    /// Calls `f` on every group element in lexicographic order (first
    /// coordinate most significant).
    pub fn for_each_element(&self, mut f: impl FnMut(&[u64])) {
        for_each_vector(&self.orders, &mut f);
    }
}

pub(crate) fn for_each_vector(orders: &[u64], f: &mut impl FnMut(&[u64])) {
    let n = orders.len();
    let mut x = vec![0u64; n];
    loop {
        f(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            x[i] += 1;
            if x[i] < orders[i] {
                break;
            }
            x[i] = 0;
        }
    }
}

/// A homogeneous quadratic refinement: `q(e_i) = qnum_i / 2N mod 1`, with
/// `q(Σ x_i e_i) = Σ x_i² q(e_i) + Σ_{i<j} x_i x_j B_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramQuadratic {
    base: GramPairing,
    qnums: Vec<u64>,
}

impl GramQuadratic {
    /// `qvals` as reduced rationals; each must satisfy `2 q(e_i) = B_ii` and
    /// `d_i² q(e_i) = 0` mod 1.
    pub fn from_rationals(base: GramPairing, qvals: &[(i64, u64)]) -> Result<Self> {
        if qvals.len() != base.rank() {
            return Err(Error::InvalidGram("one qval per generator is required".into()));
        }
        let big = 2 * base.modulus;
        let mut qnums = Vec::with_capacity(qvals.len());
        for (i, &(num, den)) in qvals.iter().enumerate() {
            let (num, den) = reduce_mod1(num, den)?;
            if big % den != 0 {
                return Err(Error::InvalidGram(format!("qval {i} = {num}/{den} has an incompatible denominator")));
            }
            qnums.push(num * (big / den));
        }
        GramQuadratic::from_numerators(base, qnums)
    }

    pub fn from_numerators(base: GramPairing, qnums: Vec<u64>) -> Result<Self> {
        let big = 2 * base.modulus;
        for (i, &q) in qnums.iter().enumerate() {
            if (2 * q) % big != (2 * base.nums[i][i]) % big {
                return Err(Error::InvalidGram(format!("2 q(e_{i}) differs from B_{i}{i}")));
            }
            let d = base.orders[i] as u128;
            if (d * d * q as u128) % big as u128 != 0 {
                return Err(Error::InvalidGram(format!("q is not homogeneous on generator {i}")));
            }
        }
        Ok(GramQuadratic { base, qnums: qnums.into_iter().map(|q| q % big).collect() })
    }

    pub fn base(&self) -> &GramPairing {
        &self.base
    }

    /// Numerator of `q(e_i)` over `2N`.
    pub fn qnum(&self, i: usize) -> u64 {
        self.qnums[i]
    }

    pub fn qval_rational(&self, i: usize) -> (u64, u64) {
        let big = 2 * self.base.modulus;
        let g = gcd(self.qnums[i], big);
        (self.qnums[i] / g, big / g)
    }

    /// Numerator of `q(x)` over `2N`.
    pub fn value(&self, x: &[u64]) -> u64 {
        let big = 2 * self.base.modulus as u128;
        let n = self.base.rank();
        let mut acc: u128 = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            let xi = x[i] as u128;
            acc = (acc + xi * xi % big * self.qnums[i] as u128) % big;
            for j in i + 1..n {
                acc = (acc + 2 * (xi * x[j] as u128 % big) * self.base.nums[i][j] as u128) % big;
            }
        }
        acc as u64
    }

    pub fn block_sum(&self, other: &GramQuadratic) -> GramQuadratic {
        let base = self.base.block_sum(&other.base);
        let scale_a = base.modulus / self.base.modulus;
        let scale_b = base.modulus / other.base.modulus;
        let mut qnums: Vec<u64> = self.qnums.iter().map(|q| q * scale_a).collect();
        qnums.extend(other.qnums.iter().map(|q| q * scale_b));
        GramQuadratic { base, qnums }
    }

    pub fn empty() -> GramQuadratic {
        GramQuadratic { base: GramPairing::empty(), qnums: Vec::new() }
    }

    /// Restriction to the `p`-primary part.
    pub fn primary_part(&self, p: u64) -> GramQuadratic {
        let base = self.base.primary_part(p);
        if base.rank() == 0 {
            return GramQuadratic::empty();
        }
        let big_old = 2 * self.base.modulus as u128;
        let big_new = 2 * base.modulus as u128;
        let mut qnums = Vec::new();
        for i in 0..self.base.rank() {
            let a = valuation(self.base.orders[i], p);
            if a == 0 {
                continue;
            }
            let c = (self.base.orders[i] / p.pow(a)) as u128;
            let v = c * c % big_old * self.qnums[i] as u128 % big_old;
            qnums.push((v * big_new / big_old) as u64 % big_new as u64);
        }
        GramQuadratic { base, qnums }
    }
}
