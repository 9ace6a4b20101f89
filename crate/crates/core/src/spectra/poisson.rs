use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::level::Level;
use crate::partitions::{count_onc_blocks, count_onc_by_enumeration, factorial};
use crate::poly::Polynomial;
use crate::spectra::series::{FormalSeries, LambdaPoly};
use crate::Rational;

/// Largest order for which Poisson moments are enumerated.
pub const POISSON_ORDER_CAP: usize = 10;

fn moment_from_counts(counts: impl Fn(usize) -> num_bigint::BigUint, n: usize) -> LambdaPoly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (q, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = Rational::new(counts(q).into(), factorial(q).into());
    }
    if n == 0 {
        coeffs[0] = Rational::one();
    }
    Polynomial::new(coeffs)
}

/// Limit moment `Σ_q λ^q/q! · |ONC_n(q, m)|` of the Poisson law at `level`,
/// with the counts obtained by enumeration.
pub fn poisson_moment(level: Level, n: usize) -> Result<LambdaPoly> {
    if n > POISSON_ORDER_CAP {
        return Err(Error::OrderCap { order: n, cap: POISSON_ORDER_CAP });
    }
    let counts = count_onc_by_enumeration(n, level, false);
    Ok(moment_from_counts(|q| counts[q].clone(), n))
}

/// Same moment with the block counts taken from the recurrence.
pub fn poisson_moment_by_recurrence(level: Level, n: usize) -> LambdaPoly {
    moment_from_counts(|q| count_onc_blocks(n, q, level), n)
}

/// Coefficients `M_n(λ)` of `H(λ, z) = Σ_n M_n(λ) z^{−n−1}`, `n = 0..=order`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonSeries {
    pub level: Level,
    moments: Vec<LambdaPoly>,
}

impl PoissonSeries {
    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    /// Coefficient of `z^{−n−1}`.
    pub fn coefficient(&self, n: usize) -> &LambdaPoly {
        &self.moments[n]
    }

    pub fn moments(&self) -> &[LambdaPoly] {
        &self.moments
    }

    /// `M_n(λ, q)`: the `λ^q` part of the `n`-th moment.
    pub fn table_entry(&self, n: usize, q: usize) -> Rational {
        self.moments[n].coeff(q)
    }

    fn as_w_series(&self) -> FormalSeries {
        let mut coeffs = vec![LambdaPoly::zero()];
        coeffs.extend(self.moments.iter().cloned());
        FormalSeries::new(coeffs, self.moments.len() + 1)
    }

    fn from_w_series(level: Level, h: &FormalSeries) -> Self {
        PoissonSeries { level, moments: h.coeffs()[1..].to_vec() }
    }
}

/// One step of the hierarchy: `H ↦ (1 − H)/(z − zH − λ)`, in `w = 1/z` as
/// `w(1 − H)/(1 − H − λw)`.
fn next_level(h: &FormalSeries) -> FormalSeries {
    let len = h.len();
    let one = FormalSeries::monomial(LambdaPoly::one(), 0, len);
    let w = FormalSeries::monomial(LambdaPoly::one(), 1, len);
    let lw = FormalSeries::monomial(LambdaPoly::x(), 1, len);
    let rest = one.sub(h);
    w.mul(&rest).mul(&rest.sub(&lw).inverse_unit())
}

/// Generating series of the Poisson law at `level` up to `z^{−order−1}`: the
/// monotone series comes from enumeration, higher levels from the recurrence.
pub fn poisson_series(level: Level, order: usize) -> Result<PoissonSeries> {
    let base_moments = (0..=order)
        .map(|n| poisson_moment(Level::MONOTONE, n))
        .collect::<Result<Vec<_>>>()?;
    let base = PoissonSeries { level: Level::MONOTONE, moments: base_moments };
    let steps = match level {
        Level::Finite(m) => m as usize - 1,
        // Coefficient n is stable once the level exceeds n.
        Level::Infinite => order + 1,
    };
    let mut h = base.as_w_series();
    for _ in 0..steps {
        h = next_level(&h);
    }
    Ok(PoissonSeries::from_w_series(level, &h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn lam_poly(c: &[(i64, i64)]) -> LambdaPoly {
        Polynomial::new(c.iter().map(|&(n, d)| Rational::from_ratio(n, d)).collect())
    }

    #[test]
    fn low_orders() {
        for level in [Level::Finite(1), Level::Finite(3), Level::Infinite] {
            assert_eq!(poisson_moment(level, 1).unwrap(), lam_poly(&[(0, 1), (1, 1)]));
        }
        assert_eq!(poisson_moment(Level::Finite(1), 2).unwrap(), lam_poly(&[(0, 1), (1, 1), (1, 1)]));
        assert!(poisson_moment(Level::Finite(1), 11).is_err());
    }

    #[test]
    fn series_matches_enumeration() {
        for level in [Level::Finite(1), Level::Finite(2), Level::Finite(3), Level::Infinite] {
            let series = poisson_series(level, 6).unwrap();
            assert_eq!(series.coefficient(0), &LambdaPoly::one());
            for n in 0..=6 {
                assert_eq!(series.coefficient(n), &poisson_moment(level, n).unwrap(), "{level} n={n}");
            }
            assert_eq!(series.table_entry(3, 0), Rational::zero());
        }
    }

    #[test]
    fn recurrence_counts_agree() {
        for level in [Level::Finite(1), Level::Finite(2), Level::Infinite] {
            for n in 1..=6 {
                assert_eq!(poisson_moment_by_recurrence(level, n), poisson_moment(level, n).unwrap());
            }
        }
    }
}
