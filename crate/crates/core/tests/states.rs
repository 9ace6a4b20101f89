use monohier::corpus;
use monohier::partitions::associate_tuple;
use monohier::poly::Polynomial;
use monohier::states::{
    evaluate_word, AlgebraIndex, Letter, MomentPoly, ProductSpace, Registry, SymbolicMarginals, Word,
    DEFAULT_MAX_BASIS,
};
use monohier::{Level, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn symbolic(word: &Word<Rational>, level: Level) -> MomentPoly {
    let w = word.map(|c| MomentPoly::constant(c.clone()));
    evaluate_word(&w, level, &SymbolicMarginals).unwrap()
}

fn generators(indices: &[AlgebraIndex]) -> Word<Rational> {
    Word::of_generators(indices)
}

/// Every alternating tuple of length `n` over `1..=k`.
fn alternating(n: usize, k: u32) -> Vec<Vec<AlgebraIndex>> {
    let mut out: Vec<Vec<AlgebraIndex>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for i in (1..=k).filter(|&i| t.last() != Some(&i)) {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// End of the increasing run `i_m < … < i_r` (1-based `r`), if `n ≥ m`.
fn run_end(indices: &[AlgebraIndex], m: usize) -> Option<usize> {
    if indices.len() < m {
        return None;
    }
    let mut r = m;
    while r < indices.len() && indices[r - 1] < indices[r] {
        r += 1;
    }
    Some(r)
}

fn alternating_strategy(max_len: usize) -> impl Strategy<Value = Vec<AlgebraIndex>> {
    proptest::collection::vec(1u32..=4, 1..=max_len).prop_map(|mut v| {
        for k in 1..v.len() {
            if v[k] == v[k - 1] {
                v[k] = v[k] % 4 + 1;
            }
        }
        v
    })
}

#[test]
fn monotone_words_factor_at_local_maxima() {
    for n in 1..=6 {
        for t in alternating(n, 3) {
            let k = (0..n)
                .find(|&k| (k == 0 || t[k - 1] < t[k]) && (k + 1 == n || t[k + 1] < t[k]))
                .expect("a maximum exists");
            let mut rest = t.clone();
            rest.remove(k);
            let whole = symbolic(&generators(&t), Level::MONOTONE);
            let factored = MomentPoly::var(t[k], 1) * symbolic(&generators(&rest), Level::MONOTONE);
            assert_eq!(whole, factored, "{t:?}");
        }
    }
}

#[test]
fn short_words_agree_with_free_values() {
    for m in 1..=3u32 {
        for n in 1..=2 * m as usize {
            for t in alternating(n, 3) {
                let w = generators(&t);
                assert_eq!(symbolic(&w, Level::Finite(m)), symbolic(&w, Level::FREE), "m={m} {t:?}");
            }
        }
    }
    // Length 2m + 1 can already differ.
    let w = generators(&[2, 1, 2]);
    assert_ne!(symbolic(&w, Level::MONOTONE), symbolic(&w, Level::FREE));
}

#[test]
fn singleton_mean_zero_kills() {
    for n in 2..=6 {
        for t in alternating(n, 3) {
            for j in 0..n {
                if t.iter().filter(|&&i| i == t[j]).count() != 1 {
                    continue;
                }
                let mut letters = generators(&t).letters;
                letters[j] = Letter::centered(t[j], Polynomial::x());
                for level in [Level::MONOTONE, Level::Finite(2), Level::FREE] {
                    assert!(symbolic(&Word::new(letters.clone()), level).is_zero(), "{t:?} j={j}");
                }
            }
        }
    }
}

#[test]
fn factor_counts_follow_partition_class() {
    for m in 1..=3u32 {
        let level = Level::Finite(m);
        for n in 2..=6 {
            for t in alternating(n, 3) {
                let p = associate_tuple(&t).unwrap();
                let blocks = p.block_count() as u32;
                let value = symbolic(&generators(&t), level);
                let counts = value.factor_counts();
                if p.in_onc(level) {
                    assert_eq!(counts, vec![blocks], "m={m} {t:?}: {value}");
                } else {
                    assert!(counts.iter().all(|&c| c > blocks), "m={m} {t:?}: {value}");
                }
            }
        }
    }
}

#[test]
fn centered_prefix_before_descent_vanishes() {
    for m in 1..=3usize {
        for n in 1..=6 {
            for t in alternating(n, 4) {
                let Some(r) = run_end(&t, m) else { continue };
                let mut letters = generators(&t).letters;
                for (k, l) in letters.iter_mut().enumerate().take(r) {
                    *l = Letter::centered(t[k], Polynomial::monomial(Rational::one(), 1 + k % 2));
                }
                let value = symbolic(&Word::new(letters), Level::Finite(m as u32));
                assert!(value.is_zero(), "m={m} {t:?} r={r}: {value}");
            }
        }
    }
}

#[test]
fn units_inside_the_increasing_run_are_removable() {
    for m in 1..=3usize {
        for n in 1..=6 {
            for t in alternating(n, 3) {
                let Some(r) = run_end(&t, m) else { continue };
                let base = generators(&t).letters;
                for j in 0..r {
                    let mut with_unit = base.clone();
                    with_unit[j] = Letter::unit(t[j]);
                    let mut without = base.clone();
                    without.remove(j);
                    let level = Level::Finite(m as u32);
                    assert_eq!(
                        symbolic(&Word::new(with_unit), level),
                        symbolic(&Word::new(without), level),
                        "m={m} {t:?} j={j}"
                    );
                }
            }
        }
    }
}

fn check_engines(seed: u64, level: Level, max_len: usize) {
    let mut rng = corpus::rng(seed);
    let specs = vec![corpus::discrete_marginal(&mut rng, 1, 16), corpus::discrete_marginal(&mut rng, 2, 16)];
    let reg = Registry::new(specs).unwrap();
    let bound = (level == Level::FREE).then_some(max_len / 2);
    let space = ProductSpace::build(level, &reg, bound, DEFAULT_MAX_BASIS).unwrap();
    for n in 0..=max_len {
        let word = corpus::random_word(&mut rng, n, &[1, 2], 2);
        let a = evaluate_word(&word, level, &reg).unwrap();
        let b = space.vacuum_moment(&word).unwrap();
        assert_eq!(a, b, "{level} {word}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engines_agree(seed in any::<u64>(), level in prop_oneof![Just(Level::MONOTONE), Just(Level::Finite(2)), Just(Level::FREE)]) {
        check_engines(seed, level, 6);
    }

    #[test]
    fn symbolic_and_numeric_evaluation_agree(indices in alternating_strategy(6), seed in any::<u64>()) {
        let mut rng = corpus::rng(seed);
        let reg = Registry::new((1..=4).map(|i| corpus::discrete_marginal(&mut rng, i, 16)).collect()).unwrap();
        let w = generators(&indices);
        for level in [Level::MONOTONE, Level::Finite(2)] {
            let exact = evaluate_word(&w, level, &reg).unwrap();
            let sym = symbolic(&w, level).eval(|i, k| reg.get(i).unwrap().moments[k as usize].clone());
            prop_assert_eq!(exact, sym);
        }
    }
}
