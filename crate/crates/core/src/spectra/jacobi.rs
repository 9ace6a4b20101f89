use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::level::Level;
use crate::partitions::{count_onc_pairs, factorial};
use crate::scalar::Scalar;
use crate::Rational;

/// Jacobi parameters `β_1, β_2, ..` of a symmetric measure: a finite prefix
/// followed by a constant tail.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiSequence<S> {
    prefix: Vec<S>,
    tail: S,
}

impl<S: Scalar> JacobiSequence<S> {
    pub fn new(prefix: Vec<S>, tail: S) -> Self {
        JacobiSequence { prefix, tail }
    }

    pub fn prefix(&self) -> &[S] {
        &self.prefix
    }

    pub fn tail(&self) -> &S {
        &self.tail
    }

    /// `β_n`, 1-based.
    pub fn beta(&self, n: usize) -> S {
        assert!(n >= 1, "Jacobi parameters are indexed from 1");
        self.prefix.get(n - 1).cloned().unwrap_or_else(|| self.tail.clone())
    }

    /// First `depth` parameters.
    pub fn truncated(&self, depth: usize) -> Vec<S> {
        (1..=depth).map(|n| self.beta(n)).collect()
    }

    /// The sequence with `β` inserted in front.
    pub fn shifted(&self, beta: S) -> Self {
        let mut prefix = Vec::with_capacity(self.prefix.len() + 1);
        prefix.push(beta);
        prefix.extend(self.prefix.iter().cloned());
        JacobiSequence { prefix, tail: self.tail.clone() }
    }

    pub fn to_f64(&self) -> JacobiSequence<f64> {
        JacobiSequence {
            prefix: self.prefix.iter().map(Scalar::to_f64).collect(),
            tail: self.tail.to_f64(),
        }
    }
}

/// Jacobi parameters of the central limit law at `level`: `m` ones, then 1/2.
pub fn jacobi_for_m(level: Level) -> JacobiSequence<Rational> {
    match level {
        Level::Finite(m) => JacobiSequence::new(vec![Rational::one(); m as usize], Rational::from_ratio(1, 2)),
        Level::Infinite => JacobiSequence::new(Vec::new(), Rational::one()),
    }
}

/// Central limit moment `φ(x^n)` at `level`: `|ONC²_{2k}(m)| / k!` for `n = 2k`.
pub fn clt_moment(level: Level, n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let k = n / 2;
    Rational::new(count_onc_pairs(k, level).into(), factorial(k).into())
}

/// `n`-th moment of the measure with Jacobi parameters `seq`.
pub fn moments_from_jacobi<S: Scalar>(seq: &JacobiSequence<S>, n: usize) -> S {
    moments_from_jacobi_truncated(seq, n, n / 2 + 1).expect("depth chosen large enough")
}

/// `n`-th moment as the `(0, 0)` entry of `T^n`, `T` the tridiagonal operator
/// built from the first `depth` parameters (unit subdiagonal, `β` superdiagonal).
pub fn moments_from_jacobi_truncated<S: Scalar>(seq: &JacobiSequence<S>, n: usize, depth: usize) -> Result<S> {
    if depth < n / 2 + 1 {
        return Err(Error::InsufficientDepth { depth, order: n });
    }
    let betas = seq.truncated(depth);
    let mut v = vec![S::zero(); depth + 1];
    v[0] = S::one();
    for _ in 0..n {
        let mut w = vec![S::zero(); depth + 1];
        for j in 0..=depth {
            if v[j].is_zero() {
                continue;
            }
            if j + 1 <= depth {
                w[j + 1] = w[j + 1].clone() + v[j].clone();
            }
            if j >= 1 {
                w[j - 1] = w[j - 1].clone() + betas[j - 1].clone() * v[j].clone();
            }
        }
        v = w;
    }
    Ok(v[0].clone())
}
