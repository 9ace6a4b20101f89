//! Unordered non-crossing pair partitions together with support profiles:
//! inner-block counts and admissible colorings.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::level::Level;
use crate::partitions::enumerate::{noncrossing_partitions, LinearExtensions, Nesting};
use crate::partitions::ordered::{is_noncrossing, OrderedPartition};
use crate::partitions::support::{compatible, SupportProfile};
use crate::scalar::Scalar;

/// Non-crossing pair partition of `{1..2k}` with blocks sorted by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl PairPartition {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = pairs
            .iter()
            .map(|&(a, b)| if a < b { vec![a, b] } else { vec![b, a] })
            .collect();
        let n = 2 * blocks.len();
        // Validates cover and disjointness.
        OrderedPartition::new(n, blocks.clone())?;
        if !is_noncrossing(&blocks) {
            return Err(Error::Crossing);
        }
        Ok(Self::from_sorted_blocks(blocks))
    }

    fn from_sorted_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.sort_by_key(|b| b[0]);
        let nesting = Nesting::of(&blocks);
        PairPartition {
            pairs: blocks.iter().map(|b| (b[0], b[1])).collect(),
            parent: nesting.parent,
            depth: nesting.depth,
        }
    }

    /// The unordered pair partition underlying an ordered one.
    pub fn from_ordered(p: &OrderedPartition) -> Result<Self> {
        if !p.is_pair_partition() {
            return Err(Error::InvalidPartition("not a pair partition".into()));
        }
        if !p.is_noncrossing() {
            return Err(Error::Crossing);
        }
        Ok(Self::from_sorted_blocks(p.unordered_blocks()))
    }

    /// Number of blocks `k`.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn n(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.pairs.iter().map(|&(a, b)| vec![a, b]).collect()
    }

    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    /// `true` when block `inner` lies inside block `outer`.
    pub fn is_inner(&self, inner: usize, outer: usize) -> bool {
        let mut b = inner;
        while let Some(p) = self.parent[b] {
            if p == outer {
                return true;
            }
            b = p;
        }
        false
    }

    fn nesting(&self) -> Nesting {
        Nesting { parent: self.parent.clone(), depth: self.depth.clone() }
    }

    /// The ordered partition with blocks listed in `order`.
    pub fn ordered(&self, order: &[usize]) -> OrderedPartition {
        let blocks = order.iter().map(|&b| vec![self.pairs[b].0, self.pairs[b].1]).collect();
        OrderedPartition::from_blocks_unchecked(self.n(), blocks)
    }
}

/// All non-crossing pair partitions of `{1..2k}`.
pub fn nc_pair_partitions(k: usize) -> Vec<PairPartition> {
    noncrossing_partitions(2 * k, true)
        .into_iter()
        .map(PairPartition::from_sorted_blocks)
        .collect()
}

/// Support group of every block; errors when a pair straddles two supports.
pub fn block_supports<S: Scalar>(pi: &PairPartition, profile: &SupportProfile<S>) -> Result<Vec<usize>> {
    if profile.len() != pi.n() {
        return Err(Error::InvalidArgument(format!(
            "profile has {} entries for a pair partition of {} points",
            profile.len(),
            pi.n()
        )));
    }
    let groups = profile.groups();
    pi.pairs
        .iter()
        .map(|&(a, b)| {
            if groups[a - 1] == groups[b - 1] {
                Ok(groups[a - 1])
            } else {
                Err(Error::InconsistentProfile(format!(
                    "positions {a} and {b} are paired but carry {} and {}",
                    profile.at(a),
                    profile.at(b)
                )))
            }
        })
        .collect()
}

/// Number of blocks inner to block `i` carrying the same support.
pub fn inn_count<S: Scalar>(pi: &PairPartition, profile: &SupportProfile<S>, i: usize) -> Result<usize> {
    inn_count_at(pi, profile, i, Level::MONOTONE)
}

/// Depth-adjusted inner count: zero for blocks shallower than `level`.
pub fn inn_count_at<S: Scalar>(
    pi: &PairPartition,
    profile: &SupportProfile<S>,
    i: usize,
    level: Level,
) -> Result<usize> {
    let sup = block_supports(pi, profile)?;
    Ok(inn_with(pi, &sup, i, level))
}

fn inn_with(pi: &PairPartition, sup: &[usize], i: usize, level: Level) -> usize {
    if !level.constrains_depth(pi.depth[i]) {
        return 0;
    }
    (0..pi.k()).filter(|&j| sup[j] == sup[i] && pi.is_inner(j, i)).count()
}

/// `Π (Inn(π_i) + 1)` over all blocks.
pub fn inn_product<S: Scalar>(pi: &PairPartition, profile: &SupportProfile<S>, level: Level) -> Result<BigUint> {
    let sup = block_supports(pi, profile)?;
    Ok((0..pi.k()).map(|i| BigUint::from(inn_with(pi, &sup, i, level) + 1)).product())
}

/// Whether some coloring monotone from depth `level` is compatible with the
/// profile: no constrained ancestor may carry a later support than a descendant.
pub fn admits_coloring<S: Scalar>(pi: &PairPartition, profile: &SupportProfile<S>, level: Level) -> Result<bool> {
    block_supports(pi, profile)?;
    let support = |b: usize| profile.at(pi.pairs[b].0);
    for d in 0..pi.k() {
        let mut a = d;
        while let Some(p) = pi.parent[a] {
            if level.constrains_depth(pi.depth[p]) && support(d).precedes(support(p)) {
                return Ok(false);
            }
            a = p;
        }
    }
    Ok(true)
}

/// Admissible colorings of `pi` for the monotone case, counted by enumeration.
pub fn coloring_count<S: Scalar>(pi: &PairPartition, profile: &SupportProfile<S>) -> Result<BigUint> {
    coloring_count_at(pi, profile, Level::MONOTONE)
}

/// Orderings of the blocks of `pi` that are monotone from depth `level` and
/// compatible with `profile`, counted by enumeration.
pub fn coloring_count_at<S: Scalar>(
    pi: &PairPartition,
    profile: &SupportProfile<S>,
    level: Level,
) -> Result<BigUint> {
    block_supports(pi, profile)?;
    let mut ext = LinearExtensions::new(pi.nesting().coloring_constraints(level));
    let mut count = BigUint::zero();
    while let Some(order) = ext.advance() {
        if compatible(&pi.ordered(order), profile)? {
            count += BigUint::one();
        }
    }
    Ok(count)
}
