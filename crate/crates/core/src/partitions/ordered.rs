use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level::Level;

/// Ordered partition of `{1..n}`. The position of a block in `blocks` is its
/// color; elements are 1-based and each block is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct OrderedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for OrderedPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        OrderedPartition::new(raw.n, raw.blocks)
    }
}

/// Nesting data of a partition: which blocks are outer to which.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClass {
    pub noncrossing: bool,
    pub pair: bool,
    /// Depth of each block; `None` for crossing partitions.
    pub depths: Option<Vec<usize>>,
    /// `outer[j][i]` is true when block `j` is outer with respect to block `i`.
    pub outer: Vec<Vec<bool>>,
}

impl OrderedPartition {
    /// Validates and builds a partition; blocks are sorted internally but their
    /// order (the coloring) is kept.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 && !blocks.is_empty() {
            return Err(Error::InvalidPartition("blocks given for an empty ground set".into()));
        }
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > n {
                    return Err(Error::InvalidPartition(format!("element {e} outside 1..={n}")));
                }
                if seen[e] {
                    return Err(Error::InvalidPartition(format!("element {e} appears twice")));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::InvalidPartition(format!("element {missing} is not covered")));
        }
        Ok(OrderedPartition { n, blocks })
    }

    pub(crate) fn from_blocks_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        OrderedPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_pair_partition(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    pub fn is_noncrossing(&self) -> bool {
        is_noncrossing(&self.blocks)
    }

    /// `true` when block `outer` is outer with respect to block `inner`
    /// (some gap between consecutive elements of `outer` contains all of `inner`).
    pub fn is_outer(&self, outer: usize, inner: usize) -> bool {
        outer != inner && encloses(&self.blocks[outer], &self.blocks[inner])
    }

    pub fn classify(&self) -> PartitionClass {
        let p = self.blocks.len();
        let outer: Vec<Vec<bool>> = (0..p)
            .map(|j| (0..p).map(|i| self.is_outer(j, i)).collect())
            .collect();
        let noncrossing = self.is_noncrossing();
        let depths = noncrossing.then(|| {
            (0..p)
                .map(|i| 1 + (0..p).filter(|&j| outer[j][i]).count())
                .collect()
        });
        PartitionClass {
            noncrossing,
            pair: self.is_pair_partition(),
            depths,
            outer,
        }
    }

    /// Depth of block `i` (0-based position): one plus the number of outer blocks.
    pub fn depth(&self, i: usize) -> Result<usize> {
        if i >= self.blocks.len() {
            return Err(Error::InvalidArgument(format!("block index {i} out of range")));
        }
        if !self.is_noncrossing() {
            return Err(Error::Crossing);
        }
        Ok(1 + (0..self.blocks.len()).filter(|&j| self.is_outer(j, i)).count())
    }

    /// Membership in the ordered non-crossing partitions whose coloring is
    /// monotone from depth `level` on.
    pub fn in_onc(&self, level: Level) -> bool {
        let class = self.classify();
        let Some(depths) = class.depths else {
            return false;
        };
        let p = self.blocks.len();
        for j in 0..p {
            if !level.constrains_depth(depths[j]) {
                continue;
            }
            for i in 0..p {
                if class.outer[j][i] && j >= i {
                    return false;
                }
            }
        }
        true
    }

    /// Index tuple `(i_1..i_n)` with `i_s = r + 1` for `s` in block `r`.
    pub fn canonical_tuple(&self) -> Vec<usize> {
        let mut tuple = vec![0; self.n];
        for (r, block) in self.blocks.iter().enumerate() {
            for &e in block {
                tuple[e - 1] = r + 1;
            }
        }
        tuple
    }

    /// Color (0-based block position) of each element, indexed by `element - 1`.
    pub fn colors(&self) -> Vec<usize> {
        self.canonical_tuple().into_iter().map(|c| c - 1).collect()
    }

    /// Blocks sorted by least element: the underlying unordered partition.
    pub fn unordered_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = self.blocks.clone();
        blocks.sort_by_key(|b| b[0]);
        blocks
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (r, block) in self.blocks.iter().enumerate() {
            if r > 0 {
                f.write_str(",")?;
            }
            let inner: Vec<String> = block.iter().map(|e| e.to_string()).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        f.write_str(")")
    }
}

pub(crate) fn encloses(outer: &[usize], inner: &[usize]) -> bool {
    let (lo, hi) = (inner[0], inner[inner.len() - 1]);
    outer.windows(2).any(|w| w[0] < lo && hi < w[1])
}

pub(crate) fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
    // Crossing: s < r < s' < r' with s, s' in one block and r, r' in another.
    for (a, ba) in blocks.iter().enumerate() {
        for bb in blocks.iter().skip(a + 1) {
            if crosses(ba, bb) || crosses(bb, ba) {
                return false;
            }
        }
    }
    true
}

fn crosses(x: &[usize], y: &[usize]) -> bool {
    for (i, &s) in x.iter().enumerate() {
        for &s2 in &x[i + 1..] {
            let inside = y.iter().any(|&r| s < r && r < s2);
            let outside_right = y.iter().any(|&r| r > s2);
            if inside && outside_right {
                return true;
            }
        }
    }
    false
}

/// Ordered partition associated with an index tuple: block `j` holds the
/// positions carrying the `j`-th smallest distinct value.
pub fn associate_tuple<T: Ord + Clone>(indices: &[T]) -> Result<OrderedPartition> {
    if indices.is_empty() {
        return Err(Error::InvalidArgument("empty index tuple".into()));
    }
    let mut values: Vec<T> = indices.to_vec();
    values.sort();
    values.dedup();
    let blocks = values
        .iter()
        .map(|v| {
            indices
                .iter()
                .enumerate()
                .filter(|(_, x)| *x == v)
                .map(|(s, _)| s + 1)
                .collect()
        })
        .collect();
    Ok(OrderedPartition::from_blocks_unchecked(indices.len(), blocks))
}
