//! Piecewise polynomial functions with finitely many breakpoints.

use std::fmt;

use crate::partitions::IntervalIndicator;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Function equal to `pieces[k]` on `(breaks[k], breaks[k+1]]` and zero
/// outside `(breaks[0], breaks[last]]`. Canonical: no zero piece at either
/// end, no two equal neighbouring pieces; the zero function has no breaks.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePolynomial<S> {
    breaks: Vec<S>,
    pieces: Vec<Polynomial<S>>,
}

fn sorted_union<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut all: Vec<S> = a.iter().chain(b).cloned().collect();
    all.sort_by(|x, y| x.partial_cmp(y).expect("breakpoints are comparable"));
    all.dedup();
    all
}

impl<S: Scalar> PiecewisePolynomial<S> {
    pub fn zero() -> Self {
        PiecewisePolynomial { breaks: Vec::new(), pieces: Vec::new() }
    }

    pub fn new(breaks: Vec<S>, pieces: Vec<Polynomial<S>>) -> Self {
        assert_eq!(breaks.len(), pieces.len() + 1, "one piece per pair of breakpoints");
        assert!(breaks.windows(2).all(|w| w[0] < w[1]), "breakpoints must increase");
        let mut out_breaks = vec![breaks[0].clone()];
        let mut out_pieces: Vec<Polynomial<S>> = Vec::new();
        for (p, b) in pieces.into_iter().zip(breaks.into_iter().skip(1)) {
            if out_pieces.last() == Some(&p) {
                *out_breaks.last_mut().unwrap() = b;
            } else {
                out_pieces.push(p);
                out_breaks.push(b);
            }
        }
        while out_pieces.last().is_some_and(Polynomial::is_zero) {
            out_pieces.pop();
            out_breaks.pop();
        }
        while out_pieces.first().is_some_and(Polynomial::is_zero) {
            out_pieces.remove(0);
            out_breaks.remove(0);
        }
        if out_pieces.is_empty() {
            return Self::zero();
        }
        PiecewisePolynomial { breaks: out_breaks, pieces: out_pieces }
    }

    pub fn indicator(f: &IntervalIndicator<S>) -> Self {
        Self::new(vec![f.start().clone(), f.end().clone()], vec![Polynomial::constant(S::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn breaks(&self) -> &[S] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Polynomial<S>] {
        &self.pieces
    }

    /// Lowest coefficient of the first piece, used to normalize scalings.
    pub fn leading(&self) -> Option<&S> {
        self.pieces.first().and_then(|p| p.coeffs().iter().find(|c| !c.is_zero()))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PiecewisePolynomial { breaks: self.breaks.clone(), pieces: self.pieces.iter().map(|p| p.scale(c)).collect() }
    }

    /// Piece covering `(a, b]`, which must not straddle a breakpoint.
    fn piece_on(&self, a: &S, b: &S) -> Polynomial<S> {
        for (k, p) in self.pieces.iter().enumerate() {
            if &self.breaks[k] <= a && b <= &self.breaks[k + 1] {
                return p.clone();
            }
        }
        Polynomial::zero()
    }

    pub fn eval(&self, x: &S) -> S {
        for (k, p) in self.pieces.iter().enumerate() {
            if &self.breaks[k] < x && x <= &self.breaks[k + 1] {
                return p.eval(x);
            }
        }
        S::zero()
    }

    /// Refinement of this function's support by the breakpoints of `other`.
    fn grid_within(&self, other: &Self) -> Vec<S> {
        let (lo, hi) = (&self.breaks[0], self.breaks.last().unwrap());
        sorted_union(&self.breaks, &other.breaks).into_iter().filter(|x| lo <= x && x <= hi).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let grid = self.grid_within(other);
        let pieces = grid.windows(2).map(|w| &self.piece_on(&w[0], &w[1]) * &other.piece_on(&w[0], &w[1])).collect();
        Self::new(grid, pieces)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let grid = sorted_union(&self.breaks, &other.breaks);
        let pieces = grid.windows(2).map(|w| &self.piece_on(&w[0], &w[1]) + &other.piece_on(&w[0], &w[1])).collect();
        Self::new(grid, pieces)
    }

    pub fn integral(&self) -> S {
        self.pieces
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (k, p)| acc + p.integrate(&self.breaks[k], &self.breaks[k + 1]))
    }

    /// `∫_{y > c} self(y) dy`.
    pub fn integral_above(&self, c: &S) -> S {
        let mut acc = S::zero();
        for (k, p) in self.pieces.iter().enumerate() {
            let (a, b) = (&self.breaks[k], &self.breaks[k + 1]);
            if b > c {
                acc = acc + p.integrate(if a > c { a } else { c }, b);
            }
        }
        acc
    }

    /// `∫_{y < c} self(y) dy`.
    pub fn integral_below(&self, c: &S) -> S {
        self.integral() - self.integral_above(c)
    }

    /// `g(x) · ∫_{y > x} self(y) dy`.
    pub fn tail_times(&self, g: &Self) -> Self {
        self.cumulative_times(g, true)
    }

    /// `g(x) · ∫_{y < x} self(y) dy`.
    pub fn head_times(&self, g: &Self) -> Self {
        self.cumulative_times(g, false)
    }

    fn cumulative_times(&self, g: &Self, above: bool) -> Self {
        if self.is_zero() || g.is_zero() {
            return Self::zero();
        }
        let grid = g.grid_within(self);
        let pieces = grid
            .windows(2)
            .map(|w| {
                let (a, b) = (&w[0], &w[1]);
                let gp = g.piece_on(a, b);
                if gp.is_zero() {
                    return gp;
                }
                let anti = self.piece_on(a, b).antiderivative();
                // Cumulative integral as a polynomial in x on (a, b].
                let psi = if above {
                    &Polynomial::constant(anti.eval(b) + self.integral_above(b)) - &anti
                } else {
                    &anti + &Polynomial::constant(self.integral_below(a) - anti.eval(a))
                };
                &gp * &psi
            })
            .collect();
        Self::new(grid, pieces)
    }
}

impl<S: Scalar> fmt::Display for PiecewisePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, p) in self.pieces.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "({}, {}]: {}", self.breaks[k], self.breaks[k + 1], p)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_ratio(n, 1)
    }

    fn ind(s: i64, t: i64) -> PiecewisePolynomial<Rational> {
        PiecewisePolynomial::indicator(&IntervalIndicator::new(q(s), q(t)).unwrap())
    }

    #[test]
    fn canonical_form() {
        let one = Polynomial::constant(q(1));
        let f = PiecewisePolynomial::new(
            vec![q(0), q(1), q(2), q(3), q(4)],
            vec![Polynomial::zero(), one.clone(), one, Polynomial::zero()],
        );
        assert_eq!(f, ind(1, 3));
        assert!(ind(0, 1).mul(&ind(1, 2)).is_zero());
        assert_eq!(ind(0, 2).mul(&ind(1, 3)), ind(1, 2));
        assert_eq!(ind(0, 1).add(&ind(1, 2)), ind(0, 2));
    }

    #[test]
    fn cumulative_integrals() {
        // g(x) ∫_{y>x} 1_(0,2] dy on g = 1_(1,3]: (2 − x) on (1,2], 0 after.
        let t = ind(0, 2).tail_times(&ind(1, 3));
        assert_eq!(t.eval(&Rational::from_ratio(3, 2)), Rational::from_ratio(1, 2));
        assert_eq!(t.eval(&Rational::from_ratio(5, 2)), q(0));
        assert_eq!(t.integral(), Rational::from_ratio(1, 2));
        // Below the support the tail is the full integral.
        let below = ind(5, 7).tail_times(&ind(0, 1));
        assert_eq!(below, ind(0, 1).scale(&q(2)));
        let head = ind(0, 2).head_times(&ind(1, 3));
        assert_eq!(head.eval(&Rational::from_ratio(3, 2)), Rational::from_ratio(3, 2));
        assert_eq!(head.eval(&Rational::from_ratio(5, 2)), q(2));
        assert_eq!(ind(0, 4).integral_above(&q(1)), q(3));
        assert_eq!(ind(0, 4).integral_below(&q(1)), q(1));
    }
}
