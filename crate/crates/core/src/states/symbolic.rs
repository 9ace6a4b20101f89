//! Polynomials in formal marginal moments `μ_{i,k} = φ_i(a_i^k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Product of moment variables: sorted `((index, order), exponent)` pairs.
pub type Monomial = Vec<((u32, u32), u32)>;

/// Rational linear combination of monomials in the moment variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MomentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MomentPoly {
    /// The variable `μ_{index,order}`; order 0 is the constant 1.
    pub fn var(index: u32, order: u32) -> Self {
        if order == 0 {
            return Self::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![((index, order), 1)], Rational::one());
        MomentPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MomentPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Number of marginal moments multiplied together in each term.
    pub fn factor_counts(&self) -> Vec<u32> {
        self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum()).collect()
    }

    /// Substitutes numeric values for the variables.
    pub fn eval(&self, value: impl Fn(u32, u32) -> Rational) -> Rational {
        self.terms
            .iter()
            .map(|(mono, c)| {
                mono.iter()
                    .fold(c.clone(), |acc, &((i, k), e)| acc * num_traits::pow(value(i, k), e as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    fn add_term(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, c: Rational) {
        match terms.get_mut(&mono) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    terms.remove(&mono);
                }
            }
            None if !c.is_zero() => {
                terms.insert(mono, c);
            }
            None => {}
        }
    }
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut map: BTreeMap<(u32, u32), u32> = a.iter().cloned().collect();
    for &(v, e) in b {
        *map.entry(v).or_insert(0) += e;
    }
    map.into_iter().collect()
}

impl Add for MomentPoly {
    type Output = MomentPoly;
    fn add(mut self, rhs: MomentPoly) -> MomentPoly {
        for (m, c) in rhs.terms {
            MomentPoly::add_term(&mut self.terms, m, c);
        }
        self
    }
}

impl Sub for MomentPoly {
    type Output = MomentPoly;
    fn sub(self, rhs: MomentPoly) -> MomentPoly {
        self + (-rhs)
    }
}

impl Neg for MomentPoly {
    type Output = MomentPoly;
    fn neg(self) -> MomentPoly {
        MomentPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for MomentPoly {
    type Output = MomentPoly;
    fn mul(self, rhs: MomentPoly) -> MomentPoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                MomentPoly::add_term(&mut terms, mono_mul(ma, mb), ca.clone() * cb.clone());
            }
        }
        MomentPoly { terms }
    }
}

impl Zero for MomentPoly {
    fn zero() -> Self {
        MomentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MomentPoly {
    fn one() -> Self {
        MomentPoly::constant(Rational::one())
    }
}

impl fmt::Display for MomentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (n, (mono, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            out.push_str(match (n, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            let mut factors: Vec<String> = Vec::new();
            if mono.is_empty() || !magnitude.is_one() {
                factors.push(magnitude.to_string());
            }
            for &((i, k), e) in mono {
                factors.push(if e == 1 { format!("m{i}_{k}") } else { format!("m{i}_{k}^{e}") });
            }
            out.push_str(&factors.join("*"));
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn arithmetic_and_cancellation() {
        let a = MomentPoly::var(1, 1);
        let b = MomentPoly::var(2, 2);
        let p = (a.clone() + b.clone()) * (a.clone() - b.clone());
        assert_eq!(p, a.clone() * a.clone() - b.clone() * b.clone());
        assert!((p.clone() - p).is_zero());
        assert_eq!((a.clone() * a * b).factor_counts(), vec![3]);
        assert_eq!(MomentPoly::var(3, 0), MomentPoly::one());
    }

    #[test]
    fn evaluation() {
        let p = MomentPoly::var(1, 2) * MomentPoly::var(2, 1) - MomentPoly::constant(Rational::from_i64(3));
        let v = p.eval(|i, k| Rational::from_i64((10 * i + k) as i64));
        assert_eq!(v, Rational::from_i64(12 * 21 - 3));
        assert_eq!(p.to_string(), "-3 + m1_2*m2_1");
    }
}
