//! Words in the free product of the algebras and their text grammar.
//!
//! A letter is an element of one algebra, written as a polynomial in its
//! self-adjoint generator. Grammar, letters separated by optional whitespace:
//! `a1` generator of algebra 1, `b2^3` cube of the generator of algebra 2,
//! `u1` unit of algebra 1, `c(a1^2)` the centered element `a1^2 − φ(a1^2)·1`,
//! and an optional rational coefficient prefix such as `3/2*a1`.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{parse_rational, Ring};
use crate::Rational;

/// Index of an algebra in the linearly ordered index set.
pub type AlgebraIndex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LetterKind<R> {
    /// `p(a_i)`.
    Element(Polynomial<R>),
    /// `p(a_i) − φ_i(p(a_i))·1_i`.
    Centered(Polynomial<R>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter<R> {
    pub index: AlgebraIndex,
    pub kind: LetterKind<R>,
}

impl<R: Ring> Letter<R> {
    pub fn element(index: AlgebraIndex, p: Polynomial<R>) -> Self {
        Letter { index, kind: LetterKind::Element(p) }
    }

    pub fn centered(index: AlgebraIndex, p: Polynomial<R>) -> Self {
        Letter { index, kind: LetterKind::Centered(p) }
    }

    /// `a_i^power`.
    pub fn generator(index: AlgebraIndex, power: usize) -> Self {
        Self::element(index, Polynomial::monomial(R::one(), power))
    }

    pub fn unit(index: AlgebraIndex) -> Self {
        Self::element(index, Polynomial::one())
    }

    pub fn polynomial(&self) -> &Polynomial<R> {
        match &self.kind {
            LetterKind::Element(p) | LetterKind::Centered(p) => p,
        }
    }

    pub fn scaled(&self, c: R) -> Self {
        let p = self.polynomial() * &Polynomial::constant(c);
        let kind = match self.kind {
            LetterKind::Element(_) => LetterKind::Element(p),
            LetterKind::Centered(_) => LetterKind::Centered(p),
        };
        Letter { index: self.index, kind }
    }
}


/// Finite product of letters, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word<R> {
    pub letters: Vec<Letter<R>>,
}

impl<R: Ring> Word<R> {
    pub fn new(letters: Vec<Letter<R>>) -> Self {
        Word { letters }
    }

    /// The word `a_{i_1} a_{i_2} .. a_{i_n}` of plain generators.
    pub fn of_generators(indices: &[AlgebraIndex]) -> Self {
        Word { letters: indices.iter().map(|&i| Letter::generator(i, 1)).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn indices(&self) -> Vec<AlgebraIndex> {
        self.letters.iter().map(|l| l.index).collect()
    }

    /// Maps every coefficient into another ring.
    pub fn map<T: Ring>(&self, f: impl Fn(&R) -> T) -> Word<T> {
        let conv = |p: &Polynomial<R>| Polynomial::new(p.coeffs().iter().map(&f).collect());
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    index: l.index,
                    kind: match &l.kind {
                        LetterKind::Element(p) => LetterKind::Element(conv(p)),
                        LetterKind::Centered(p) => LetterKind::Centered(conv(p)),
                    },
                })
                .collect(),
        }
    }
}

impl Word<Rational> {
    pub fn parse(text: &str) -> Result<Self> {
        Parser { s: text.as_bytes(), pos: 0, text }.word()
    }
}

impl std::str::FromStr for Word<Rational> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in word `{}`", self.pos, self.text))
    }

    fn skip_space(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.text[start..self.pos].parse().map_err(|_| self.err("number out of range"))
    }

    fn word(mut self) -> Result<Word<Rational>> {
        let mut letters = Vec::new();
        loop {
            self.skip_space();
            if self.pos >= self.s.len() {
                break;
            }
            letters.push(self.letter()?);
        }
        Ok(Word { letters })
    }

    fn letter(&mut self) -> Result<Letter<Rational>> {
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c != b'*') {
                    self.pos += 1;
                }
                let text = &self.text[start..self.pos];
                let q = parse_rational(text).ok_or_else(|| self.err("bad coefficient"))?;
                self.pos += 1;
                Some(q)
            }
            _ => None,
        };
        let letter = self.bare_letter()?;
        Ok(match coefficient {
            Some(q) => letter.scaled(q),
            None => letter,
        })
    }

    fn bare_letter(&mut self) -> Result<Letter<Rational>> {
        let name = self.peek().ok_or_else(|| self.err("expected a letter"))?;
        if !name.is_ascii_lowercase() {
            return Err(self.err("expected a letter"));
        }
        self.pos += 1;
        if name == b'c' && self.peek() == Some(b'(') {
            self.pos += 1;
            self.skip_space();
            let inner = self.bare_letter()?;
            self.skip_space();
            if self.peek() != Some(b')') {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
            return Ok(Letter::centered(inner.index, inner.polynomial().clone()));
        }
        let index = self.number()? as AlgebraIndex;
        if name == b'u' {
            return Ok(Letter::unit(index));
        }
        let mut power = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            power = self.number()?;
        }
        Ok(Letter::generator(index, power))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Letter<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("a{}", self.index);
        let p = self.polynomial();
        let body = if p == &Polynomial::one() {
            format!("u{}", self.index)
        } else if p.coeffs().len() >= 2
            && p.coeffs().last().is_some_and(|c| c.is_one())
            && p.coeffs()[..p.coeffs().len() - 1].iter().all(|c| c == &R::zero())
        {
            let k = p.coeffs().len() - 1;
            if k == 1 {
                var
            } else {
                format!("{var}^{k}")
            }
        } else {
            format!("[{}]", p.display_in(&var))
        };
        match self.kind {
            LetterKind::Element(_) => f.write_str(&body),
            LetterKind::Centered(_) => write!(f, "c({body})"),
        }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Word<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
