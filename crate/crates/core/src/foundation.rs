//! Exact combinatorial primitives: Bell numbers, Stirling numbers of the
//! second kind, factorials and binomial coefficients.
//!
//! Values up to [`DEFAULT_TABLE_CAP`] come from a process-wide table built on
//! first use. Larger arguments are computed on demand.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Largest index held by the shared tables.
pub const DEFAULT_TABLE_CAP: usize = 64;

/// Precomputed exact tables indexed `0..=cap`.
#[derive(Debug, Clone)]
pub struct CombinatoricTables {
    cap: usize,
    bell: Vec<BigInt>,
    stirling2: Vec<Vec<BigInt>>,
    factorial: Vec<BigInt>,
    binomial: Vec<Vec<BigInt>>,
}

impl CombinatoricTables {
    pub fn new(cap: usize) -> Self {
        // Bell triangle: each row starts with the last entry of the previous
        // row; the first entry of row k is bell(k).
        let mut bell = Vec::with_capacity(cap + 1);
        let mut row = vec![BigInt::one()];
        for _ in 0..=cap {
            bell.push(row[0].clone());
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(row.last().cloned().unwrap());
            for value in &row {
                let entry = next.last().unwrap() + value;
                next.push(entry);
            }
            row = next;
        }

        let mut stirling2: Vec<Vec<BigInt>> = Vec::with_capacity(cap + 1);
        stirling2.push(vec![BigInt::one()]);
        for r in 1..=cap {
            let prev = &stirling2[r - 1];
            let mut cur = vec![BigInt::zero(); r + 1];
            for (t, slot) in cur.iter_mut().enumerate().skip(1) {
                let stay = if t < r { &prev[t] * t } else { BigInt::zero() };
                *slot = stay + &prev[t - 1];
            }
            stirling2.push(cur);
        }

        let mut factorial = Vec::with_capacity(cap + 1);
        factorial.push(BigInt::one());
        for k in 1..=cap {
            let next = &factorial[k - 1] * k;
            factorial.push(next);
        }

        let mut binomial: Vec<Vec<BigInt>> = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            let mut cur = vec![BigInt::one(); n + 1];
            for k in 1..n {
                cur[k] = &binomial[n - 1][k - 1] + &binomial[n - 1][k];
            }
            binomial.push(cur);
        }

        Self {
            cap,
            bell,
            stirling2,
            factorial,
            binomial,
        }
    }

    /// The shared tables, initialised once with [`DEFAULT_TABLE_CAP`].
    pub fn global() -> &'static Self {
        static TABLES: OnceLock<CombinatoricTables> = OnceLock::new();
        TABLES.get_or_init(|| CombinatoricTables::new(DEFAULT_TABLE_CAP))
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn bell(&self, k: usize) -> Option<&BigInt> {
        self.bell.get(k)
    }

    /// `None` only when `r` is beyond the cap; `t > r` yields zero.
    pub fn stirling2(&self, r: usize, t: usize) -> Option<BigInt> {
        let row = self.stirling2.get(r)?;
        Some(row.get(t).cloned().unwrap_or_default())
    }

    pub fn factorial(&self, k: usize) -> Option<&BigInt> {
        self.factorial.get(k)
    }

    pub fn binomial(&self, n: usize, k: usize) -> Option<BigInt> {
        let row = self.binomial.get(n)?;
        Some(row.get(k).cloned().unwrap_or_default())
    }
}

/// Number of set partitions of a `k`-element set.
pub fn bell(k: usize) -> BigInt {
    match CombinatoricTables::global().bell(k) {
        Some(v) => v.clone(),
        None => CombinatoricTables::new(k).bell[k].clone(),
    }
}

/// Partitions of an `r`-set into exactly `t` nonempty blocks.
pub fn stirling2(r: usize, t: usize) -> BigInt {
    if t > r {
        return BigInt::zero();
    }
    match CombinatoricTables::global().stirling2(r, t) {
        Some(v) => v,
        None => CombinatoricTables::new(r).stirling2[r][t].clone(),
    }
}

pub fn factorial(k: usize) -> BigInt {
    match CombinatoricTables::global().factorial(k) {
        Some(v) => v.clone(),
        None => (1..=k).fold(BigInt::one(), |acc, i| acc * i),
    }
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if let Some(v) = CombinatoricTables::global().binomial(n, k) {
        return v;
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
