//! Admissibility of invariant tables.
//!
//! A 2-adic (or quadratic) table is admissible iff
//!
//! 1. ranks are even at regular indices,
//! 2. `s(m) ≡ Σ_{k>m} r(k) (mod 2)` at regular `m`,
//! 3. `s(m) + s(m+1) ≡ 2 Σ_{k≥m+2} r(k) (mod 4)` for consecutive regular `m, m+1`,
//! 4. every extracted window of type T0..T3 whose two delimiters are regular
//!    has a delimiter difference `s(m) - s(n)` in the set allowed for its type.
//!
//! An odd-prime table is admissible iff `r(m) = 0` forces `s(m) = +1`.

use std::fmt;

use crate::algebra::z8bar::{Sign, Z8Bar};
use crate::tables::table::{AnyTable, Flavor, OddTable, SigTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    C1,
    C2,
    C3,
    C4T0,
    C4T1,
    C4T2,
    C4T3,
    Odd,
    Q0,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::C1 => "C1",
            Condition::C2 => "C2",
            Condition::C3 => "C3",
            Condition::C4T0 => "C4-T0",
            Condition::C4T1 => "C4-T1",
            Condition::C4T2 => "C4-T2",
            Condition::C4T3 => "C4-T3",
            Condition::Odd => "ODD",
            Condition::Q0 => "Q0",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub indices: Vec<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub verdict: bool,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        AdmissibilityReport { verdict: violations.is_empty(), violations }
    }

    pub fn violated(&self, c: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == c)
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verdict {
            return writeln!(f, "admissible");
        }
        writeln!(f, "not admissible")?;
        for v in &self.violations {
            writeln!(f, "  {} at {:?}: {}", v.condition, v.indices, v.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WindowType {
    T0,
    T1,
    T2,
    T3,
}

impl WindowType {
    /// Allowed values of `s(m) - s(n)` in `Z/8`.
    pub fn allowed(self) -> &'static [u8] {
        match self {
            WindowType::T0 => &[0],
            WindowType::T1 => &[1, 7],
            WindowType::T2 => &[0, 2, 6],
            WindowType::T3 => &[0, 4],
        }
    }

    fn condition(self) -> Condition {
        match self {
            WindowType::T0 => Condition::C4T0,
            WindowType::T1 => Condition::C4T1,
            WindowType::T2 => Condition::C4T2,
            WindowType::T3 => Condition::C4T3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub kind: WindowType,
    /// Left delimiter; the window is `left + 1 ..= right - 1`.
    pub left: u32,
    pub right: u32,
}

pub fn is_regular(t: &SigTable, m: u32) -> bool {
    let (r, s) = t.get(m);
    r == 0 || !s.is_infinite()
}

/// Last index worth inspecting: past it the table is identically `(0, 0)`.
fn horizon(t: &SigTable) -> u32 {
    t.max_index().unwrap_or(t.flavor().domain_min()) + 3
}

/// Every extracted window of a recognized type whose delimiters are both
/// regular and inside the (right-extended) domain.
pub fn windows(t: &SigTable) -> Vec<Window> {
    let lo = t.flavor().domain_min();
    let hi = horizon(t);
    let mut out = Vec::new();
    for left in lo..hi {
        if !is_regular(t, left) {
            continue;
        }
        let mut all_zero = true;
        let mut all_regular = true;
        for right in left + 2..=hi {
            let (r, _) = t.get(right - 1);
            all_zero &= r == 0;
            all_regular &= is_regular(t, right - 1);
            if !is_regular(t, right) {
                continue;
            }
            let len = right - left - 1;
            if len == 1 {
                match t.get(left + 1) {
                    (1, Z8Bar::Infinity) => out.push(Window { kind: WindowType::T1, left, right }),
                    (2, Z8Bar::Infinity) => out.push(Window { kind: WindowType::T2, left, right }),
                    _ => {}
                }
            }
            if len % 2 == 1 {
                if all_zero {
                    out.push(Window { kind: WindowType::T0, left, right });
                }
                if all_regular {
                    out.push(Window { kind: WindowType::T3, left, right });
                }
            }
        }
    }
    out
}

/// Full admissibility report for a 2-adic or quadratic table.
pub fn check_admissible(t: &SigTable) -> AdmissibilityReport {
    let lo = t.flavor().domain_min();
    let hi = horizon(t);
    let mut v = Vec::new();

    if t.flavor() == Flavor::Quadratic {
        let (r0, s0) = t.get(0);
        if r0 != 0 || s0.is_infinite() {
            v.push(Violation {
                condition: Condition::Q0,
                indices: vec![0],
                detail: format!("index 0 must carry (0, finite), found ({r0}, {s0})"),
            });
        }
    }

    for m in lo..=hi {
        if !is_regular(t, m) {
            continue;
        }
        let (r, s) = t.get(m);
        if r % 2 != 0 {
            v.push(Violation {
                condition: Condition::C1,
                indices: vec![m],
                detail: format!("odd rank {r} at regular index"),
            });
        }
        let above = t.rank_above(m);
        match s {
            Z8Bar::Finite(x) if (x as u64) % 2 == above % 2 => {}
            _ => v.push(Violation {
                condition: Condition::C2,
                indices: vec![m],
                detail: format!("s = {s} but the ranks above sum to {above}"),
            }),
        }
        if is_regular(t, m + 1) {
            let s1 = t.sig(m + 1);
            let target = (2 * t.rank_above(m + 1)) % 4;
            let ok = match (s, s1) {
                (Z8Bar::Finite(a), Z8Bar::Finite(b)) => ((a + b) % 4) as u64 == target,
                _ => false,
            };
            if !ok {
                v.push(Violation {
                    condition: Condition::C3,
                    indices: vec![m, m + 1],
                    detail: format!("s(m) + s(m+1) = {s} + {s1}, expected {target} mod 4"),
                });
            }
        }
    }

    for w in windows(t) {
        let (a, b) = (t.sig(w.left), t.sig(w.right));
        let ok = match (a, b) {
            (Z8Bar::Finite(x), Z8Bar::Finite(y)) => w.kind.allowed().contains(&((8 + x - y) % 8)),
            _ => false,
        };
        if !ok {
            v.push(Violation {
                condition: w.kind.condition(),
                indices: vec![w.left, w.right],
                detail: format!(
                    "window {}..={}: s(m) - s(n) = {a} - {b}, allowed {:?}",
                    w.left + 1,
                    w.right - 1,
                    w.kind.allowed()
                ),
            });
        }
    }

    AdmissibilityReport::from_violations(v)
}

/// Odd-prime tables: a vanishing rank must come with signature `+1`.
pub fn check_admissible_odd(t: &OddTable) -> AdmissibilityReport {
    let v = t
        .entries()
        .filter(|&(_, r, s)| r == 0 && s == Sign::Minus)
        .map(|(k, _, _)| Violation {
            condition: Condition::Odd,
            indices: vec![k],
            detail: "rank 0 with signature -1".into(),
        })
        .collect();
    AdmissibilityReport::from_violations(v)
}

pub fn check_admissible_any(t: &AnyTable) -> AdmissibilityReport {
    match t {
        AnyTable::Sig(t) => check_admissible(t),
        AnyTable::Odd(t) => check_admissible_odd(t),
    }
}
