//! Seeded random inputs for the randomized verification checks. Every corpus
//! is a pure function of a 64-bit seed (ChaCha8 stream), so runs are
//! reproducible across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::partitions::{IntervalIndicator, SupportProfile};
use crate::states::{AlgebraSpec, AlgebraIndex, Letter, Word};
use crate::{Rational, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    Rational::from_ratio(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// Between one and `max` pairwise disjoint intervals with rational endpoints.
pub fn disjoint_intervals(rng: &mut ChaCha8Rng, max: usize) -> Vec<IntervalIndicator<Rational>> {
    let count = rng.gen_range(1..=max);
    let mut out = Vec::with_capacity(count);
    let mut left = if rng.gen_bool(0.5) { Rational::from_i64(0) } else { small_rational(rng, 3, 4) };
    for _ in 0..count {
        let right = left.clone() + small_rational(rng, 5, 3);
        out.push(IntervalIndicator::new(left.clone(), right.clone()).expect("increasing endpoints"));
        left = if rng.gen_bool(0.5) { right } else { right + small_rational(rng, 2, 3) };
    }
    out
}

/// Profile of even length `len`: a random perfect matching of the positions,
/// each pair carrying a random interval. Every support occurs an even number
/// of times, so the moment is generically nonzero.
pub fn paired_profile(rng: &mut ChaCha8Rng, len: usize, intervals: &[IntervalIndicator<Rational>]) -> SupportProfile<Rational> {
    let mut positions: Vec<usize> = (0..len).collect();
    positions.shuffle(rng);
    let mut entries = vec![intervals[0].clone(); len];
    for pair in positions.chunks(2) {
        let f = intervals.choose(rng).expect("at least one interval").clone();
        for &p in pair {
            entries[p] = f.clone();
        }
    }
    SupportProfile::new(entries).expect("disjoint intervals")
}

/// Profile with independently drawn entries.
pub fn free_profile(rng: &mut ChaCha8Rng, len: usize, intervals: &[IntervalIndicator<Rational>]) -> SupportProfile<Rational> {
    let entries = (0..len).map(|_| intervals.choose(rng).expect("at least one interval").clone()).collect();
    SupportProfile::new(entries).expect("disjoint intervals")
}

/// `count` profiles of lengths `2..=max_len`, three in four paired.
pub fn profiles(seed: u64, count: usize, max_len: usize, max_intervals: usize) -> Vec<SupportProfile<Rational>> {
    let mut rng = rng(seed);
    (0..count)
        .map(|k| {
            let intervals = disjoint_intervals(&mut rng, max_intervals);
            if k % 4 == 3 {
                let len = rng.gen_range(1..=max_len);
                free_profile(&mut rng, len, &intervals)
            } else {
                let len = 2 * rng.gen_range(1..=max_len / 2);
                paired_profile(&mut rng, len, &intervals)
            }
        })
        .collect()
}

/// Discrete marginal with one to three atoms at small rational points and
/// positive rational weights; its model is exact in every order.
pub fn discrete_marginal(rng: &mut ChaCha8Rng, index: AlgebraIndex, max_order: usize) -> AlgebraSpec<Rational> {
    let count = rng.gen_range(1..=3usize);
    let mut points: Vec<Rational> = Vec::new();
    while points.len() < count {
        let x = Rational::from_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        if !points.contains(&x) {
            points.push(x);
        }
    }
    let raw: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=5)).collect();
    let total: i64 = raw.iter().sum();
    let atoms: Vec<(Rational, Rational)> =
        points.into_iter().zip(raw).map(|(x, w)| (x, Rational::from_ratio(w, total))).collect();
    AlgebraSpec::discrete(index, &atoms, max_order).expect("positive weights")
}

/// Word of generator powers over the given algebras, powers in `1..=max_power`.
pub fn random_word(rng: &mut ChaCha8Rng, len: usize, algebras: &[AlgebraIndex], max_power: usize) -> Word<Rational> {
    Word::new(
        (0..len)
            .map(|_| {
                let i = *algebras.choose(rng).expect("at least one algebra");
                Letter::generator(i, rng.gen_range(1..=max_power))
            })
            .collect(),
    )
}
