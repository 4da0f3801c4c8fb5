//! Exact sums of `2^M`-th roots of unity.

use crate::error::{Error, Result};

/// `Σ c_j ζ^j` with `ζ = exp(2πi / 2^M)`, in the basis `1, ζ, …, ζ^(2^(M-1) - 1)`
/// of `Q(ζ)` (the minimal polynomial is `x^(2^(M-1)) + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSum {
    log_order: u32,
    coeffs: Vec<i64>,
}

impl CyclotomicSum {
    /// The zero element of `Z[ζ_{2^M}]`; `M` is raised to at least 3 so that
    /// eighth roots of unity are available.
    pub fn zero(log_order: u32) -> Self {
        let m = log_order.max(3);
        CyclotomicSum { log_order: m, coeffs: vec![0; 1 << (m - 1)] }
    }

    pub fn log_order(&self) -> u32 {
        self.log_order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn order(&self) -> u64 {
        1 << self.log_order
    }

    fn half(&self) -> u64 {
        1 << (self.log_order - 1)
    }

    /// Adds `count · ζ^t`.
    pub fn add_root(&mut self, t: u64, count: i64) {
        let t = t % self.order();
        let h = self.half();
        if t < h {
            self.coeffs[t as usize] += count;
        } else {
            self.coeffs[(t - h) as usize] -= count;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Multiplication by `ζ^t`.
    pub fn mul_root(&self, t: u64) -> Self {
        let mut out = CyclotomicSum { log_order: self.log_order, coeffs: vec![0; self.coeffs.len()] };
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out.add_root(j as u64 + t, c);
            }
        }
        out
    }

    /// Complex conjugate, i.e. `ζ ↦ ζ^-1`.
    pub fn conj(&self) -> Self {
        let mut out = CyclotomicSum { log_order: self.log_order, coeffs: vec![0; self.coeffs.len()] };
        let n = self.order();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out.add_root((n - j as u64) % n, c);
            }
        }
        out
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order() as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, &c)| {
            let th = 2.0 * std::f64::consts::PI * j as f64 / n;
            (re + c as f64 * th.cos(), im + c as f64 * th.sin())
        })
    }

    /// The `s ∈ Z/8` with `self · ζ_8^-s` real and positive, or `None` for zero.
    ///
    /// Realness is decided exactly; the float value only supplies the sign of
    /// a quantity already known to be a nonzero real.
    pub fn arg8(&self) -> Result<Option<u8>> {
        if self.is_zero() {
            return Ok(None);
        }
        let step = self.order() / 8;
        for s in 0..8u8 {
            let rotated = self.mul_root(self.order() - s as u64 * step);
            if rotated.is_real() && rotated.to_complex().0 > 0.0 {
                return Ok(Some(s));
            }
        }
        Err(Error::Internal("Gauss sum is not a real multiple of an eighth root of unity".into()))
    }
}
