//! Enumeration of ordered non-crossing partitions.
//!
//! Unordered non-crossing partitions are generated by fixing the block of the
//! least element and recursing into the gaps it leaves. Each one is then
//! expanded into its admissible colorings, which are exactly the linear
//! extensions of the "outer block colored first" constraints for blocks at or
//! below the monotone depth. Colorings are emitted in lexicographic order of
//! the block sequence `(P_1, P_2, ..)`, blocks being numbered by least element.

use num_bigint::BigUint;

use crate::level::Level;
use crate::partitions::ordered::{encloses, OrderedPartition};

/// Unordered non-crossing partitions of `{lo..=hi}`, blocks sorted by least element.
pub fn noncrossing_partitions(n: usize, pairs_only: bool) -> Vec<Vec<Vec<usize>>> {
    if pairs_only && n % 2 == 1 {
        return Vec::new();
    }
    let mut out = generate(1, n, pairs_only);
    for p in &mut out {
        p.sort_by_key(|b| b[0]);
    }
    out
}

fn generate(lo: usize, hi: usize, pairs_only: bool) -> Vec<Vec<Vec<usize>>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut block = vec![lo];
    extend_first_block(&mut block, hi, pairs_only, vec![Vec::new()], &mut out);
    out
}

fn extend_first_block(
    block: &mut Vec<usize>,
    hi: usize,
    pairs_only: bool,
    inner: Vec<Vec<Vec<usize>>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let last = *block.last().unwrap();
    let may_close = !pairs_only || block.len() == 2;
    let may_grow = !pairs_only || block.len() < 2;
    if may_close {
        let tails = generate(last + 1, hi, pairs_only);
        for head in &inner {
            for tail in &tails {
                let mut p = Vec::with_capacity(1 + head.len() + tail.len());
                p.push(block.clone());
                p.extend(head.iter().cloned());
                p.extend(tail.iter().cloned());
                out.push(p);
            }
        }
    }
    if may_grow {
        for next in last + 1..=hi {
            let gap = next - last - 1;
            if pairs_only && gap % 2 == 1 {
                continue;
            }
            let gaps = generate(last + 1, next - 1, pairs_only);
            let mut combined = Vec::with_capacity(inner.len() * gaps.len());
            for head in &inner {
                for g in &gaps {
                    let mut c = head.clone();
                    c.extend(g.iter().cloned());
                    combined.push(c);
                }
            }
            block.push(next);
            extend_first_block(block, hi, pairs_only, combined, out);
            block.pop();
        }
    }
}

/// Nesting forest of a non-crossing partition whose blocks are sorted by least element.
#[derive(Debug, Clone)]
pub struct Nesting {
    /// Innermost outer block of each block.
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl Nesting {
    pub fn of(blocks: &[Vec<usize>]) -> Nesting {
        let p = blocks.len();
        let mut parent = vec![None; p];
        let mut depth = vec![1; p];
        for i in 0..p {
            let outers: Vec<usize> = (0..p)
                .filter(|&j| j != i && encloses(&blocks[j], &blocks[i]))
                .collect();
            depth[i] = 1 + outers.len();
            // Outer blocks form a chain; the innermost one starts last.
            parent[i] = outers.into_iter().max_by_key(|&j| blocks[j][0]);
        }
        Nesting { parent, depth }
    }

    /// `true` when `anc` is a (strict) ancestor of `b`.
    pub fn is_ancestor(&self, anc: usize, mut b: usize) -> bool {
        while let Some(p) = self.parent[b] {
            if p == anc {
                return true;
            }
            b = p;
        }
        false
    }

    /// Precedence edges `parent -> child` that the coloring must respect at `level`.
    pub fn coloring_constraints(&self, level: Level) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.parent.len()];
        for (child, parent) in self.parent.iter().enumerate() {
            if let Some(p) = *parent {
                if level.constrains_depth(self.depth[p]) {
                    succ[p].push(child);
                }
            }
        }
        succ
    }
}

/// Linear extensions of a DAG on `0..p`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct LinearExtensions {
    succ: Vec<Vec<usize>>,
    indeg: Vec<usize>,
    placed: Vec<bool>,
    order: Vec<usize>,
    cursors: Vec<usize>,
    started: bool,
    done: bool,
}

impl LinearExtensions {
    pub fn new(succ: Vec<Vec<usize>>) -> Self {
        let p = succ.len();
        let mut indeg = vec![0; p];
        for s in succ.iter().flatten() {
            indeg[*s] += 1;
        }
        LinearExtensions {
            succ,
            indeg,
            placed: vec![false; p],
            order: Vec::with_capacity(p),
            cursors: Vec::with_capacity(p + 1),
            started: false,
            done: false,
        }
    }

    fn place(&mut self, b: usize) {
        self.placed[b] = true;
        self.order.push(b);
        for &s in &self.succ[b] {
            self.indeg[s] -= 1;
        }
    }

    fn unplace(&mut self) {
        let b = self.order.pop().expect("unplace on empty prefix");
        self.placed[b] = false;
        for &s in &self.succ[b] {
            self.indeg[s] += 1;
        }
    }

    /// Advances to the next extension, returning it by reference.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        let p = self.succ.len();
        if !self.started {
            self.started = true;
            self.cursors.push(0);
        } else {
            if p == 0 {
                self.done = true;
                return None;
            }
            self.cursors.pop();
            self.unplace();
        }
        loop {
            let level = self.order.len();
            if level == p {
                return Some(&self.order);
            }
            let start = self.cursors[level];
            let found = (start..p).find(|&b| !self.placed[b] && self.indeg[b] == 0);
            match found {
                Some(b) => {
                    self.cursors[level] = b + 1;
                    self.place(b);
                    self.cursors.push(0);
                }
                None => {
                    self.cursors.pop();
                    if self.order.is_empty() {
                        self.done = true;
                        return None;
                    }
                    self.unplace();
                }
            }
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(|o| o.to_vec())
    }
}

/// Stream of the ordered non-crossing partitions of `{1..n}` whose coloring is
/// monotone from depth `level` on; with `pairs_only`, only pair partitions.
pub fn enumerate_onc(n: usize, level: Level, pairs_only: bool) -> impl Iterator<Item = OrderedPartition> {
    noncrossing_partitions(n, pairs_only)
        .into_iter()
        .flat_map(move |blocks| {
            let nesting = Nesting::of(&blocks);
            let ext = LinearExtensions::new(nesting.coloring_constraints(level));
            ext.map(move |order| {
                let ordered = order.iter().map(|&b| blocks[b].clone()).collect();
                OrderedPartition::from_blocks_unchecked(n, ordered)
            })
        })
}

/// Counts of ordered non-crossing partitions by number of blocks, obtained by
/// walking every admissible coloring. Index `q` holds the count with `q` blocks.
pub fn count_onc_by_enumeration(n: usize, level: Level, pairs_only: bool) -> Vec<BigUint> {
    let mut counts = vec![0u64; n + 1];
    for blocks in noncrossing_partitions(n, pairs_only) {
        let nesting = Nesting::of(&blocks);
        let mut ext = LinearExtensions::new(nesting.coloring_constraints(level));
        let mut c = 0u64;
        while ext.advance().is_some() {
            c += 1;
        }
        counts[blocks.len()] += c;
    }
    counts.into_iter().map(BigUint::from).collect()
}
