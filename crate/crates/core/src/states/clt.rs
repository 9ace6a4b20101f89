//! Exact finite-N moments of normalized sums of identically distributed
//! m-monotone variables.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::level::Level;
use crate::states::algebra::{AlgebraSpec, Registry};
use crate::states::evaluator::evaluate_word;
use crate::states::word::{Letter, Word};
use crate::{Rational, Scalar};

/// Largest supported moment order.
pub const FINITE_N_ORDER_CAP: usize = 8;

/// `value · N^{−half_power/2}`; `half_power` is 0 for even orders.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteNMoment {
    pub value: Rational,
    pub half_power: u32,
    pub n_variables: u64,
}

impl FiniteNMoment {
    /// The exact moment, available when no square root of `N` remains.
    pub fn exact(&self) -> Option<&Rational> {
        (self.half_power == 0).then_some(&self.value)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64() * (self.n_variables as f64).powf(-(self.half_power as f64) / 2.0)
    }
}

/// Calls `f` with every surjection `[n] → [b]`, as a color vector with
/// values `0..b`, together with `b`.
pub fn for_each_surjection(n: usize, mut f: impl FnMut(&[usize], usize) -> Result<()>) -> Result<()> {
    // Set partitions by restricted growth strings, then every labeling of the blocks.
    fn growth(
        n: usize,
        rgs: &mut Vec<usize>,
        blocks: usize,
        f: &mut dyn FnMut(&[usize], usize) -> Result<()>,
    ) -> Result<()> {
        if rgs.len() == n {
            let mut perm: Vec<usize> = (0..blocks).collect();
            loop {
                let colors: Vec<usize> = rgs.iter().map(|&b| perm[b]).collect();
                f(&colors, blocks)?;
                if !next_permutation(&mut perm) {
                    return Ok(());
                }
            }
        }
        for b in 0..=blocks {
            rgs.push(b);
            growth(n, rgs, blocks.max(b + 1), f)?;
            rgs.pop();
        }
        Ok(())
    }
    if n == 0 {
        return f(&[], 0);
    }
    growth(n, &mut Vec::with_capacity(n), 0, &mut f)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn binomial(n: u64, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k as u64 {
        if j >= n {
            return BigInt::zero();
        }
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Sums `S_b` of the moments of all words `X_{c(1)} … X_{c(n)}` whose coloring
/// `c` is a surjection onto `b` ordered variables. Moments of identically
/// distributed m-monotone variables depend only on the order pattern of the
/// indices, so `φ((X_1 + … + X_N)^n) = Σ_b C(N, b) S_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderPatternSums {
    order: usize,
    sums: Vec<Rational>,
}

impl OrderPatternSums {
    pub fn new(level: Level, order: usize, template: &AlgebraSpec<Rational>) -> Result<Self> {
        if order > FINITE_N_ORDER_CAP {
            return Err(Error::OrderCap { order, cap: FINITE_N_ORDER_CAP });
        }
        let moment = |k: usize| template.moments.get(k).cloned().unwrap_or_else(Rational::zero);
        if template.moments.len() < 3 || !moment(1).is_zero() || !moment(2).is_one() {
            return Err(Error::InvalidArgument("template marginal must have mean 0 and variance 1".into()));
        }
        let registry = Registry::new(
            (1..=order.max(1) as u32)
                .map(|i| AlgebraSpec { index: i, ..template.clone() })
                .collect(),
        )?;
        let mut sums = vec![Rational::zero(); order + 1];
        for_each_surjection(order, |colors, blocks| {
            let word = Word::new(colors.iter().map(|&c| Letter::generator(c as u32 + 1, 1)).collect());
            sums[blocks] += evaluate_word(&word, level, &registry)?;
            Ok(())
        })?;
        Ok(OrderPatternSums { order, sums })
    }

    /// `S_b` for `b = 0..=n`.
    pub fn sums(&self) -> &[Rational] {
        &self.sums
    }

    /// `φ(((X_1 + … + X_N)/√N)^n)`.
    pub fn moment(&self, n_variables: u64) -> Result<FiniteNMoment> {
        if n_variables == 0 {
            return Err(Error::InvalidArgument("at least one variable is needed".into()));
        }
        let sum = self.sums.iter().enumerate().fold(Rational::zero(), |acc, (b, s)| {
            acc + s.clone() * Rational::from_integer(binomial(n_variables, b))
        });
        Ok(if self.order % 2 == 0 {
            let scale = num_traits::pow(BigInt::from(n_variables), self.order / 2);
            FiniteNMoment { value: sum / Rational::from_integer(scale), half_power: 0, n_variables }
        } else {
            FiniteNMoment { value: sum, half_power: self.order as u32, n_variables }
        })
    }
}

/// `φ(((X_1 + … + X_N)/√N)^n)` for `N` copies of the template marginal.
pub fn clt_moment_finite_n(
    level: Level,
    n_variables: u64,
    order: usize,
    template: &AlgebraSpec<Rational>,
) -> Result<FiniteNMoment> {
    OrderPatternSums::new(level, order, template)?.moment(n_variables)
}
