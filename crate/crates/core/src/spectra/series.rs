//! Truncated formal power series whose coefficients are polynomials in `λ`.

use num_traits::One;

use crate::poly::Polynomial;
use crate::Rational;

pub type LambdaPoly = Polynomial<Rational>;

/// `Σ_{j < len} c_j w^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalSeries {
    coeffs: Vec<LambdaPoly>,
}

impl FormalSeries {
    pub fn new(mut coeffs: Vec<LambdaPoly>, len: usize) -> Self {
        coeffs.resize(len, LambdaPoly::zero());
        FormalSeries { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Self::new(Vec::new(), len)
    }

    /// `c · w^k`.
    pub fn monomial(c: LambdaPoly, k: usize, len: usize) -> Self {
        let mut s = Self::zero(len);
        if k < len {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: usize) -> &LambdaPoly {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        FormalSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        FormalSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut out = vec![LambdaPoly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FormalSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be `1`.
    pub fn inverse_unit(&self) -> Self {
        assert!(self.coeffs[0] == LambdaPoly::one(), "series constant term must be 1");
        let len = self.len();
        let mut inv = vec![LambdaPoly::zero(); len];
        inv[0] = LambdaPoly::one();
        for j in 1..len {
            let mut acc = LambdaPoly::zero();
            for i in 1..=j {
                acc = &acc + &(&self.coeffs[i] * &inv[j - i]);
            }
            inv[j] = -acc;
        }
        FormalSeries { coeffs: inv }
    }
}
