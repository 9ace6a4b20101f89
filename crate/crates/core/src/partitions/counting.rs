//! Closed forms and recurrences for the sizes of ordered non-crossing partition classes.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::level::Level;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `(2k-1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, j| acc * BigUint::from(2 * j - 1))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

pub fn catalan(k: usize) -> BigUint {
    binomial(2 * k, k) / BigUint::from(k + 1)
}

/// Number of ordered non-crossing pair partitions of `2k` points, monotone from
/// depth `level`, by the recurrence on the block of the first point.
pub fn count_onc_pairs(k: usize, level: Level) -> BigUint {
    match level {
        Level::Infinite => factorial(k) * catalan(k),
        Level::Finite(_) => {
            let mut memo = HashMap::new();
            pairs_rec(k, level, &mut memo)
        }
    }
}

fn pairs_rec(k: usize, level: Level, memo: &mut HashMap<(usize, Level), BigUint>) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    let inner_level = match level {
        Level::Finite(1) | Level::Finite(0) => return double_factorial_odd(k),
        Level::Infinite => return factorial(k) * catalan(k),
        Level::Finite(m) => Level::Finite(m - 1),
    };
    if let Some(v) = memo.get(&(k, level)) {
        return v.clone();
    }
    // N_{2n+2}(m) = sum_j j C(n+1, j) N_{2j-2}(m-1) N_{2n-2j+2}(m), with k = n+1.
    let mut total = BigUint::zero();
    for j in 1..=k {
        let inner = pairs_rec(j - 1, inner_level, memo);
        let outer = pairs_rec(k - j, level, memo);
        total += BigUint::from(j) * binomial(k, j) * inner * outer;
    }
    memo.insert((k, level), total.clone());
    total
}

/// Number of ordered non-crossing partitions of `{1..n}` with `q` blocks of any
/// size, monotone from depth `level`.
///
/// Splits on the block of the least element: the gaps it encloses are
/// partitions one level shallower (for `m >= 2`) and the tail after it is of
/// the same kind. Colors are shared out multinomially; at `m = 1` the enclosed
/// blocks must additionally take colors above the enclosing block.
pub fn count_onc_blocks(n: usize, q: usize, level: Level) -> BigUint {
    let mut counter = BlockCounter::default();
    counter.count(n, q, level)
}

#[derive(Default)]
struct BlockCounter {
    totals: HashMap<(usize, usize, Level), BigUint>,
    gap_runs: HashMap<(usize, usize, Level), BigUint>,
}

impl BlockCounter {
    fn count(&mut self, n: usize, q: usize, level: Level) -> BigUint {
        if n == 0 {
            return if q == 0 { BigUint::one() } else { BigUint::zero() };
        }
        if q == 0 || q > n {
            return BigUint::zero();
        }
        if let Some(v) = self.totals.get(&(n, q, level)) {
            return v.clone();
        }
        let (gap_level, monotone_here) = match level.pred() {
            Some(inner) => (inner, false),
            None => (level, true),
        };
        let mut total = BigUint::zero();
        // s: ground-set size enclosed by the first block, c: colors used inside.
        for s in 0..n {
            for c in 0..q {
                let gaps = self.gap_run(s, c, gap_level);
                if gaps.is_zero() {
                    continue;
                }
                let tail = self.count(n - 1 - s, q - 1 - c, level);
                if tail.is_zero() {
                    continue;
                }
                let weight = if monotone_here {
                    binomial(q, c + 1)
                } else {
                    BigUint::from(q) * binomial(q - 1, c)
                };
                total += weight * gaps * tail;
            }
        }
        self.totals.insert((n, q, level), total.clone());
        total
    }

    /// Sequences of consecutive gaps (each gap `k >= 1` wide holding a partition
    /// of `k - 1` points) covering `s` points and using `c` colors in total.
    fn gap_run(&mut self, s: usize, c: usize, level: Level) -> BigUint {
        if s == 0 {
            return if c == 0 { BigUint::one() } else { BigUint::zero() };
        }
        if let Some(v) = self.gap_runs.get(&(s, c, level)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for k in 1..=s {
            for c1 in 0..=c {
                let first = self.count(k - 1, c1, level);
                if first.is_zero() {
                    continue;
                }
                let rest = self.gap_run(s - k, c - c1, level);
                if rest.is_zero() {
                    continue;
                }
                total += binomial(c, c1) * first * rest;
            }
        }
        self.gap_runs.insert((s, c, level), total.clone());
        total
    }
}
