//! Ordered non-crossing partitions, their depth-monotone colorings, and
//! compatibility with tuples of interval indicators.

pub mod counting;
pub mod enumerate;
pub mod ordered;
pub mod pairing;
pub mod support;

pub use counting::{binomial, catalan, count_onc_blocks, count_onc_pairs, double_factorial_odd, factorial};
pub use enumerate::{count_onc_by_enumeration, enumerate_onc, noncrossing_partitions, LinearExtensions, Nesting};
pub use ordered::{associate_tuple, OrderedPartition, PartitionClass};
pub use pairing::{
    admits_coloring, block_supports, coloring_count, coloring_count_at, inn_count, inn_count_at, inn_product,
    nc_pair_partitions, PairPartition,
};
pub use support::{compatible, IntervalIndicator, SupportProfile};
