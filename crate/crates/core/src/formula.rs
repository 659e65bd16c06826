//! Closed-form Betti numbers of path ideals of lines, cycles and stars,
//! and the homology of the sliding-window complexes `Ω_t^n`.
//!
//! Everything here is exact integer arithmetic. The two derived indices
//!
//! ```text
//! A = (i(t+1) - 2j) / (1 - t)     number of components of order t mod t+1
//! B = (j - ti) / (1 - t)          number of components of order 0 mod t+1
//! ```
//!
//! must both be nonnegative integers for a count to be nonzero.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::betti::BettiTable;
pub use crate::graph::GraphKind as Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("no closed form for the {family} family with t = {t}")]
    Unsupported { family: &'static str, t: u64 },
    #[error("cycle formula covers degrees j < n only (j = {j}, n = {n})")]
    CycleTopDegree { j: u64, n: u64 },
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("betti number does not fit in 64 bits")]
    Overflow,
}

/// `(n, t, i, j)` for a single graded Betti number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaParams {
    pub n: u64,
    pub t: u64,
    pub i: u64,
    pub j: u64,
}

impl FormulaParams {
    pub fn new(n: u64, t: u64, i: u64, j: u64) -> Self {
        FormulaParams { n, t, i, j }
    }

    /// Exact quotient `num / (t - 1)` if it is a nonnegative integer.
    fn per_t_minus_one(&self, num: i64) -> Option<u64> {
        let d = self.t as i64 - 1;
        (d > 0 && num >= 0 && num % d == 0).then(|| (num / d) as u64)
    }

    /// `A = (i(t+1) - 2j) / (1 - t)`.
    pub fn a(&self) -> Option<u64> {
        let (t, i, j) = (self.t as i64, self.i as i64, self.j as i64);
        self.per_t_minus_one(2 * j - i * (t + 1))
    }

    /// `B = (j - ti) / (1 - t)`.
    pub fn b(&self) -> Option<u64> {
        let (t, i, j) = (self.t as i64, self.i as i64, self.j as i64);
        self.per_t_minus_one(t * i - j)
    }

    fn ab(&self) -> Option<(u64, u64)> {
        Some((self.a()?, self.b()?))
    }
}

/// `C(a, b)`, zero whenever `a < 0`, `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::from(1u32);
    for k in 1..=b {
        acc *= a - b + k;
        acc /= k;
    }
    acc
}

/// Nonzero reduced homology dimensions of `Ω_t^n`, keyed by degree.
pub fn omega_homology_dims_formula(n: u64, t: u64) -> Result<BTreeMap<i64, usize>, FormulaError> {
    if t == 0 || n < t {
        return Err(FormulaError::Range(format!("omega needs n >= t >= 1, got n = {n}, t = {t}")));
    }
    let period = t + 1;
    let mut out = BTreeMap::new();
    if n.is_multiple_of(period) {
        out.insert((2 * n / period) as i64 - 2, 1);
    } else if n % period == t {
        out.insert((2 * (n + 1) / period) as i64 - 3, 1);
    }
    Ok(out)
}

/// `b_{i,n}(S/I_t(L_n))`, the top-degree Betti numbers of a line.
pub fn line_top_betti_formula(n: u64, t: u64, i: u64) -> u64 {
    let period = t + 1;
    let hit = if n.is_multiple_of(period) {
        i * period == 2 * n
    } else if n % period == t {
        (i + 1) * period == 2 * n + 2
    } else {
        false
    };
    hit as u64
}

/// `b_{i,W}(S/I_t(G))` when `G_W` is a disjoint union of lines of the given
/// orders: 1 iff every order is 0 or t mod t+1 and exactly `A` of them are
/// t mod t+1.
pub fn line_multigraded_formula(component_orders: &[u64], t: u64, i: u64) -> u64 {
    let j: u64 = component_orders.iter().sum();
    let period = t + 1;
    if component_orders.iter().any(|&v| v % period != 0 && v % period != t) {
        return 0;
    }
    let residual_t = component_orders.iter().filter(|&&v| v % period == t).count() as u64;
    match FormulaParams::new(j, t, i, j).a() {
        Some(a) if a == residual_t => 1,
        _ => 0,
    }
}

/// `b_{i,j}(S/I_t(L_n))` for `t >= 2`, with the side conditions checked
/// explicitly.
pub fn line_graded_formula(n: u64, t: u64, i: u64, j: u64) -> BigUint {
    let p = FormulaParams::new(n, t, i, j);
    let Some((a, b)) = p.ab() else {
        return BigUint::zero();
    };
    let conditions = n >= j && j >= t * a && (n - j) + 1 >= a;
    if !conditions {
        return BigUint::zero();
    }
    line_binomial_product(n, j, a, b)
}

fn line_binomial_product(n: u64, j: u64, a: u64, b: u64) -> BigUint {
    let (n, j, a, b) = (n as i64, j as i64, a as i64, b as i64);
    binomial(n - j + 1, a) * binomial(n - j + b, n - j)
}

/// `b_{i,j}(S/I_t(C_n))` for `j < n`, `t >= 2`.
pub fn cycle_graded_formula(n: u64, t: u64, i: u64, j: u64) -> Result<BigUint, FormulaError> {
    if j >= n {
        return Err(FormulaError::CycleTopDegree { j, n });
    }
    let p = FormulaParams::new(n, t, i, j);
    let Some((a, b)) = p.ab() else {
        return Ok(BigUint::zero());
    };
    if !(n > j && j >= t * a && n - j >= a) {
        return Ok(BigUint::zero());
    }
    let (ni, ji, ai, bi) = (n as i64, j as i64, a as i64, b as i64);
    let overcount = BigUint::from(n) * binomial(ni - ji, ai) * binomial(ni - ji - 1 + bi, ni - ji - 1);
    let rotations = BigUint::from(n - j);
    assert!((&overcount % &rotations).is_zero(), "cycle count {overcount} not divisible by {rotations}");
    Ok(overcount / rotations)
}

/// `b_{i,j}(S/I_t(S_n))` for the star of size `n` and `t ∈ {2, 3}`.
pub fn star_graded_formula(n: u64, t: u64, i: u64, j: u64) -> Result<BigUint, FormulaError> {
    if n == 0 {
        return Err(FormulaError::Range("star needs size n >= 1".into()));
    }
    let leaves = binomial(n as i64, j as i64 - 1);
    match t {
        2 if i + 1 == j => Ok(leaves),
        3 if i + 2 == j => Ok(leaves * i),
        2 | 3 => Ok(BigUint::zero()),
        _ => Err(FormulaError::Unsupported { family: "star", t }),
    }
}

/// Which degrees of a formula table are backed by a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Full,
    /// Only degrees `j < bound` are covered.
    DegreesBelow(usize),
}

impl Coverage {
    pub fn covers(self, j: usize) -> bool {
        match self {
            Coverage::Full => true,
            Coverage::DegreesBelow(bound) => j < bound,
        }
    }
}

/// Whether `formula_betti_table` has a closed form for this family and `t`.
pub fn supported(family: Family, t: u64) -> bool {
    match family {
        Family::Line | Family::Cycle => t >= 2,
        Family::Star => t == 2 || t == 3,
    }
}

/// The full graded table from the closed forms. `n` follows the family
/// convention: order for lines, size for cycles and stars.
pub fn formula_betti_table(family: Family, n: u64, t: u64) -> Result<(BettiTable, Coverage), FormulaError> {
    if !supported(family, t) {
        return Err(FormulaError::Unsupported { family: family.name(), t });
    }
    let (max_j, coverage) = match family {
        Family::Line if n >= 1 => (n, Coverage::Full),
        Family::Cycle if n >= 3 => (n - 1, Coverage::DegreesBelow(n as usize)),
        Family::Star if n >= 1 => (n + 1, Coverage::Full),
        _ => return Err(FormulaError::Range(format!("{} of size {n}", family.name()))),
    };
    let mut table = BettiTable::unit();
    for j in 1..=max_j {
        for i in 1..=j {
            let b = match family {
                Family::Line => line_graded_formula(n, t, i, j),
                Family::Cycle => cycle_graded_formula(n, t, i, j)?,
                Family::Star => star_graded_formula(n, t, i, j)?,
            };
            table.add(i as usize, j as usize, b.to_u64().ok_or(FormulaError::Overflow)?);
        }
    }
    Ok((table, coverage))
}
