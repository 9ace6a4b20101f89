//! Rewriting evaluator for the m-monotone product state.
//!
//! Words are normalized by merging neighbours from the same algebra, then the
//! leftmost letter with nonzero expectation is split as `a = a⁰ + φ(a)·1`.
//! Every letter before it is centered, so the unit can be removed or killed by
//! the unit rule. A word of centered letters from alternating algebras is 0.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::Result;
use crate::level::Level;
use crate::poly::Polynomial;
use crate::scalar::Ring;
use crate::states::algebra::Marginals;
use crate::states::word::{AlgebraIndex, LetterKind, Word};

type Key<R> = Vec<(AlgebraIndex, Polynomial<R>)>;

/// Whether a unit at 0-based position `j` acts as the identity, given that all
/// letters before it are centered. `indices` is alternating.
pub fn unit_is_identity(level: Level, indices: &[AlgebraIndex], j: usize) -> bool {
    match level {
        Level::Infinite => true,
        Level::Finite(m) => {
            let m = m as usize;
            if j < m {
                return true;
            }
            indices[m - 1..=j].windows(2).all(|w| w[0] < w[1])
        }
    }
}

/// Value of the m-monotone product of the marginals on `word`.
/// Algebras are ordered by their numeric index.
pub fn evaluate_word<R, M>(word: &Word<R>, level: Level, marginals: &M) -> Result<R>
where
    R: Ring + Hash + Eq,
    M: Marginals<R> + ?Sized,
{
    let mut letters = Vec::with_capacity(word.len());
    for letter in &word.letters {
        let p = match &letter.kind {
            LetterKind::Element(p) => p.clone(),
            LetterKind::Centered(p) => {
                let mean = marginals.expectation(letter.index, p)?;
                p - &Polynomial::constant(mean)
            }
        };
        letters.push((letter.index, p));
    }
    Evaluator { level, marginals, memo: HashMap::new() }.eval(letters)
}

struct Evaluator<'a, R, M: ?Sized> {
    level: Level,
    marginals: &'a M,
    memo: HashMap<Key<R>, R>,
}

fn normalize<R: Ring>(letters: Key<R>) -> Option<Key<R>> {
    let mut out: Key<R> = Vec::with_capacity(letters.len());
    for (index, p) in letters {
        match out.last_mut() {
            Some((last, q)) if *last == index => *q = &*q * &p,
            _ => out.push((index, p)),
        }
    }
    if out.iter().any(|(_, p)| p.is_zero()) {
        None
    } else {
        Some(out)
    }
}

impl<R, M> Evaluator<'_, R, M>
where
    R: Ring + Hash + Eq,
    M: Marginals<R> + ?Sized,
{
    fn eval(&mut self, letters: Key<R>) -> Result<R> {
        let Some(letters) = normalize(letters) else {
            return Ok(R::zero());
        };
        if letters.is_empty() {
            return Ok(R::one());
        }
        if let Some(v) = self.memo.get(&letters) {
            return Ok(v.clone());
        }
        let mut split = None;
        for (j, (index, p)) in letters.iter().enumerate() {
            let mean = self.marginals.expectation(*index, p)?;
            if mean != R::zero() {
                split = Some((j, mean));
                break;
            }
        }
        let value = match split {
            None => R::zero(),
            Some((j, mean)) => {
                let mut total = R::zero();
                let centered = &letters[j].1 - &Polynomial::constant(mean.clone());
                if !centered.is_zero() {
                    let mut w = letters.clone();
                    w[j].1 = centered;
                    total = total + self.eval(w)?;
                }
                let indices: Vec<AlgebraIndex> = letters.iter().map(|l| l.0).collect();
                if unit_is_identity(self.level, &indices, j) {
                    let mut w = letters.clone();
                    w.remove(j);
                    total = total + mean * self.eval(w)?;
                }
                total
            }
        };
        self.memo.insert(letters, value.clone());
        Ok(value)
    }
}
