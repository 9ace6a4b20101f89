//! Vectors of the m-monotone Fock space over `L²(ℝ₊)` as formal combinations
//! of projected simple tensors, with creation and annihilation.

use std::fmt;

use crate::level::Level;
use crate::partitions::IntervalIndicator;
use crate::scalar::Scalar;

use super::piecewise::PiecewisePolynomial;

/// Projected tensor `g_1 ⊗_m … ⊗_m g_n`, `g_1` the most recently created
/// factor. Factors are scaled so each has leading coefficient one.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleTensor<S> {
    factors: Vec<PiecewisePolynomial<S>>,
}

impl<S: Scalar> SimpleTensor<S> {
    /// Splits off the scalar making every factor's leading coefficient one;
    /// `None` when some factor vanishes.
    pub fn normalized(factors: Vec<PiecewisePolynomial<S>>) -> Option<(S, Self)> {
        let mut c = S::one();
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            let lead = f.leading()?.clone();
            out.push(f.scale(&(S::one() / lead.clone())));
            c = c * lead;
        }
        Some((c, SimpleTensor { factors: out }))
    }

    pub fn factors(&self) -> &[PiecewisePolynomial<S>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// `vacuum · Ω + Σ c_k t_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorState<S> {
    vacuum: S,
    terms: Vec<(S, SimpleTensor<S>)>,
}

impl<S: Scalar> TensorState<S> {
    pub fn vacuum() -> Self {
        TensorState { vacuum: S::one(), terms: Vec::new() }
    }

    pub fn zero() -> Self {
        TensorState { vacuum: S::zero(), terms: Vec::new() }
    }

    pub fn from_factors(c: S, factors: Vec<PiecewisePolynomial<S>>) -> Self {
        let mut s = Self::zero();
        s.add_term(c, factors);
        s
    }

    pub fn vacuum_coeff(&self) -> &S {
        &self.vacuum
    }

    pub fn terms(&self) -> &[(S, SimpleTensor<S>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.vacuum.is_zero() && self.terms.is_empty()
    }

    fn add_term(&mut self, c: S, factors: Vec<PiecewisePolynomial<S>>) {
        if c.is_zero() {
            return;
        }
        if factors.is_empty() {
            self.vacuum = self.vacuum.clone() + c;
            return;
        }
        let Some((scale, t)) = SimpleTensor::normalized(factors) else {
            return;
        };
        let c = c * scale;
        if let Some(k) = self.terms.iter().position(|(_, u)| *u == t) {
            let sum = self.terms[k].0.clone() + c;
            if sum.is_zero() {
                self.terms.remove(k);
            } else {
                self.terms[k].0 = sum;
            }
        } else {
            self.terms.push((c, t));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.vacuum = out.vacuum.clone() + other.vacuum.clone();
        for (c, t) in &other.terms {
            out.add_term(c.clone(), t.factors.clone());
        }
        out
    }

    /// Drops every tensor longer than `max_len`.
    pub fn truncated(&self, max_len: usize) -> Self {
        TensorState {
            vacuum: self.vacuum.clone(),
            terms: self.terms.iter().filter(|(_, t)| t.len() <= max_len).cloned().collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.vacuum = self.vacuum.clone() * c.clone();
        for (d, t) in &self.terms {
            out.add_term(d.clone() * c.clone(), t.factors.clone());
        }
        out
    }
}

/// `a^{(m)}(f)`: prepends `f` to every tensor.
pub fn create<S: Scalar>(_level: Level, f: &IntervalIndicator<S>, v: &TensorState<S>) -> TensorState<S> {
    let f = PiecewisePolynomial::indicator(f);
    let mut out = TensorState::zero();
    out.add_term(v.vacuum.clone(), vec![f.clone()]);
    for (c, t) in &v.terms {
        let mut factors = Vec::with_capacity(t.len() + 1);
        factors.push(f.clone());
        factors.extend(t.factors.iter().cloned());
        out.add_term(c.clone(), factors);
    }
    out
}

/// `a^{(m)*}(f)`: pairs `f` with the first factor, over the whole line for
/// tensors of length at most `m` and over `y > x` (multiplying the next factor)
/// beyond.
pub fn annihilate<S: Scalar>(level: Level, f: &IntervalIndicator<S>, v: &TensorState<S>) -> TensorState<S> {
    let f = PiecewisePolynomial::indicator(f);
    let mut out = TensorState::zero();
    for (c, t) in &v.terms {
        let h = t.factors[0].mul(&f);
        let rest = &t.factors[1..];
        if level.covers(t.len()) {
            out.add_term(c.clone() * h.integral(), rest.to_vec());
        } else {
            let mut factors = rest.to_vec();
            factors[0] = h.tail_times(&rest[0]);
            out.add_term(c.clone(), factors);
        }
    }
    out
}

/// `⟨u, v⟩` of two projected tensors: the first `n − m + 1` coordinates are
/// integrated over `x_1 > … > x_{n−m+1}`, the others freely.
pub fn tensor_inner<S: Scalar>(level: Level, u: &SimpleTensor<S>, v: &SimpleTensor<S>) -> S {
    if u.len() != v.len() {
        return S::zero();
    }
    let n = u.len();
    let products: Vec<PiecewisePolynomial<S>> = u.factors.iter().zip(&v.factors).map(|(a, b)| a.mul(b)).collect();
    let chain = match level {
        Level::Finite(m) if n > m as usize => n - m as usize + 1,
        _ => 1,
    };
    let mut phi = products[chain - 1].clone();
    for h in products[..chain - 1].iter().rev() {
        phi = phi.head_times(h);
    }
    products[chain..].iter().fold(phi.integral(), |acc, h| acc * h.integral())
}

pub fn inner<S: Scalar>(level: Level, u: &TensorState<S>, v: &TensorState<S>) -> S {
    let mut acc = u.vacuum.clone() * v.vacuum.clone();
    for (a, s) in &u.terms {
        for (b, t) in &v.terms {
            acc = acc + a.clone() * b.clone() * tensor_inner(level, s, t);
        }
    }
    acc
}

impl<S: Scalar> fmt::Display for TensorState<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·Ω", self.vacuum)?;
        for (c, t) in &self.terms {
            write!(f, " + {c}·")?;
            for (k, g) in t.factors.iter().enumerate() {
                if k > 0 {
                    write!(f, " ⊗ ")?;
                }
                write!(f, "[{g}]")?;
            }
        }
        Ok(())
    }
}
