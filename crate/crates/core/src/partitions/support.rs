use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partitions::ordered::OrderedPartition;
use crate::scalar::{parse_rational, Scalar};

/// Indicator function of the half-open interval `(s, t]`, `0 <= s < t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalIndicator<S> {
    s: S,
    t: S,
}

impl<S: Scalar> IntervalIndicator<S> {
    pub fn new(s: S, t: S) -> Result<Self> {
        if s < S::zero() || s >= t {
            return Err(Error::InvalidArgument(format!("interval ({s}, {t}] must satisfy 0 <= s < t")));
        }
        Ok(IntervalIndicator { s, t })
    }

    pub fn start(&self) -> &S {
        &self.s
    }

    pub fn end(&self) -> &S {
        &self.t
    }

    pub fn length(&self) -> S {
        self.t.clone() - self.s.clone()
    }

    /// Strict order: the whole support of `self` lies left of `other`.
    pub fn precedes(&self, other: &Self) -> bool {
        self.t <= other.s
    }

    /// `self = other` or `self` precedes `other`.
    pub fn le(&self, other: &Self) -> bool {
        self == other || self.precedes(other)
    }

    pub fn disjoint(&self, other: &Self) -> bool {
        self.precedes(other) || other.precedes(self)
    }

    /// `<self, other>` in L^2: length of the overlap.
    pub fn pairing(&self, other: &Self) -> S {
        let lo = if self.s > other.s { self.s.clone() } else { other.s.clone() };
        let hi = if self.t < other.t { self.t.clone() } else { other.t.clone() };
        if hi > lo {
            hi - lo
        } else {
            S::zero()
        }
    }
}

impl<S: Scalar> fmt::Display for IntervalIndicator<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.s, self.t)
    }
}

/// Tuple of interval indicators whose supports are pairwise identical or disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportProfile<S> {
    entries: Vec<IntervalIndicator<S>>,
    /// Group of each position, groups numbered by first appearance.
    groups: Vec<usize>,
    distinct: Vec<IntervalIndicator<S>>,
}

impl<S: Scalar> SupportProfile<S> {
    pub fn new(entries: Vec<IntervalIndicator<S>>) -> Result<Self> {
        let mut distinct: Vec<IntervalIndicator<S>> = Vec::new();
        let mut groups = Vec::with_capacity(entries.len());
        for f in &entries {
            match distinct.iter().position(|g| g == f) {
                Some(k) => groups.push(k),
                None => {
                    if let Some(g) = distinct.iter().find(|g| !g.disjoint(f)) {
                        return Err(Error::InconsistentProfile(format!(
                            "supports {g} and {f} overlap without being identical"
                        )));
                    }
                    groups.push(distinct.len());
                    distinct.push(f.clone());
                }
            }
        }
        Ok(SupportProfile { entries, groups, distinct })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[IntervalIndicator<S>] {
        &self.entries
    }

    /// Entry at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> &IntervalIndicator<S> {
        &self.entries[pos - 1]
    }

    /// Distinct supports, in order of first appearance.
    pub fn distinct(&self) -> &[IntervalIndicator<S>] {
        &self.distinct
    }

    /// Group index of each position (0-based positions).
    pub fn groups(&self) -> &[usize] {
        &self.groups
    }

    /// The grouping `σ` as lists of 1-based positions.
    pub fn grouping(&self) -> Vec<Vec<usize>> {
        let mut sigma = vec![Vec::new(); self.distinct.len()];
        for (pos, &g) in self.groups.iter().enumerate() {
            sigma[g].push(pos + 1);
        }
        sigma
    }

    /// Pair multiplicities `b_k = |σ_k| / 2`; `None` if some group has odd size.
    pub fn pair_multiplicities(&self) -> Option<Vec<usize>> {
        self.grouping()
            .iter()
            .map(|g| (g.len() % 2 == 0).then_some(g.len() / 2))
            .collect()
    }
}

impl SupportProfile<BigRational> {
    /// Parses the `"s:t,s:t,.."` grammar with rational endpoints.
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl FromStr for SupportProfile<BigRational> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return SupportProfile::new(Vec::new());
        }
        let entries = text
            .split(',')
            .map(|item| {
                let (s, t) = item
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected `s:t`, found `{item}`")))?;
                let s = parse_rational(s).ok_or_else(|| Error::Parse(format!("bad endpoint `{s}`")))?;
                let t = parse_rational(t).ok_or_else(|| Error::Parse(format!("bad endpoint `{t}`")))?;
                IntervalIndicator::new(s, t)
            })
            .collect::<Result<Vec<_>>>()?;
        SupportProfile::new(entries)
    }
}

impl<S: Scalar> fmt::Display for SupportProfile<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Compatibility of an ordered partition with a support profile: positions in
/// one block carry the same function, and earlier-colored blocks carry
/// functions that are `<=` those of later-colored blocks.
pub fn compatible<S: Scalar>(p: &OrderedPartition, profile: &SupportProfile<S>) -> Result<bool> {
    if profile.len() != p.n() {
        return Err(Error::InvalidArgument(format!(
            "profile has {} entries for a partition of {} points",
            profile.len(),
            p.n()
        )));
    }
    let mut reps = Vec::with_capacity(p.block_count());
    for block in p.blocks() {
        let f = profile.at(block[0]);
        if block.iter().any(|&e| profile.at(e) != f) {
            return Ok(false);
        }
        reps.push(f);
    }
    for k in 0..reps.len() {
        for l in k + 1..reps.len() {
            if !reps[k].le(reps[l]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
