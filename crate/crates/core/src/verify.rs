//! Cross-route verification suites behind the `verify` command. Each check
//! compares two independent computations (or a computation against a known
//! value) and reports a one-line detail; failures are collected, not fatal.

use std::time::Instant;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus;
use crate::fock::{a_pi_closed_form, a_pi_expectation, gaussian_moment, partition_sum_moment};
use crate::partitions::{
    block_supports, catalan, coloring_count, count_onc_by_enumeration, count_onc_pairs, double_factorial_odd,
    factorial, inn_product, nc_pair_partitions, IntervalIndicator, SupportProfile,
};
use crate::spectra::{
    atoms, cauchy_continued_fraction, clt_moment, contour_moments, jacobi_for_m, moments_from_jacobi,
    poisson_moment, poisson_series, MeasureSummary,
};
use crate::states::{
    evaluate_word, AlgebraSpec, MomentPoly, OrderPatternSums, ProductSpace, Registry, SymbolicMarginals, Word,
    DEFAULT_MAX_BASIS,
};
use crate::{Level, Rational, Scalar};

/// Even central limit moments for `m = 1, 2, 3, 4, ∞` and `n = 2, 4, .., 10`.
pub const CLT_TABLE: [(Level, [(i64, i64); 5]); 5] = [
    (Level::Finite(1), [(1, 1), (3, 2), (5, 2), (35, 8), (63, 8)]),
    (Level::Finite(2), [(1, 1), (2, 1), (9, 2), (21, 2), (199, 8)]),
    (Level::Finite(3), [(1, 1), (2, 1), (5, 1), (27, 2), (75, 2)]),
    (Level::Finite(4), [(1, 1), (2, 1), (5, 1), (14, 1), (83, 2)]),
    (Level::Infinite, [(1, 1), (2, 1), (5, 1), (14, 1), (42, 1)]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Moments,
    Partitions,
    Spectra,
    Fock,
    States,
    Poisson,
    Clt,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Moments, Suite::Partitions, Suite::Spectra, Suite::Fock, Suite::States, Suite::Poisson, Suite::Clt];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Moments => "moments",
            Suite::Partitions => "partitions",
            Suite::Spectra => "spectra",
            Suite::Fock => "fock",
            Suite::States => "states",
            Suite::Poisson => "poisson",
            Suite::Clt => "clt",
        }
    }

    pub fn parse(text: &str) -> Option<Vec<Suite>> {
        if text == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|s| s.name() == text).map(|s| vec![*s])
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest number of pairs in Fock checks.
    pub max_k: usize,
    /// Longest word in state checks.
    pub len: usize,
    /// Number of random profiles in the Fock oracle check.
    pub profiles: usize,
    pub parallel: bool,
    /// Record wall-clock times (makes reports non-reproducible).
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, max_k: 4, len: 6, profiles: 200, parallel: false, timings: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

type CheckFn = fn(&VerifyConfig) -> std::result::Result<String, String>;

fn checks(suite: Suite) -> Vec<(&'static str, CheckFn)> {
    match suite {
        Suite::Moments => vec![("table", check_table), ("three_routes", check_three_routes)],
        Suite::Partitions => vec![("monotone_pairings", check_monotone_pairings), ("free_pairings", check_free_pairings)],
        Suite::Spectra => vec![("level_two_measure", check_level_two), ("level_three_atoms", check_level_three)],
        Suite::Fock => vec![
            ("equal_supports", check_equal_supports),
            ("random_profiles", check_random_profiles),
            ("diagram_values", check_diagram_values),
        ],
        Suite::States => vec![
            ("worked_examples", check_state_examples),
            ("engines", check_engines),
            ("short_words_free", check_short_words),
        ],
        Suite::Poisson => vec![("enumeration_vs_recurrence", check_poisson)],
        Suite::Clt => vec![("finite_n", check_finite_n)],
    }
}

/// Runs the suites; the report order is fixed regardless of parallelism.
pub fn run(suites: &[Suite], config: &VerifyConfig) -> Vec<Check> {
    let jobs: Vec<(Suite, &'static str, CheckFn)> =
        suites.iter().flat_map(|&s| checks(s).into_iter().map(move |(n, f)| (s, n, f))).collect();
    let run_one = |(suite, name, f): &(Suite, &'static str, CheckFn)| {
        let start = Instant::now();
        let outcome = f(config);
        let millis = config.timings.then(|| start.elapsed().as_millis());
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check { suite: suite.name(), name, passed, detail, millis }
    };
    if config.parallel {
        jobs.par_iter().map(run_one).collect()
    } else {
        jobs.iter().map(run_one).collect()
    }
}

fn ensure(ok: bool, detail: String) -> std::result::Result<String, String> {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn check_table(_: &VerifyConfig) -> std::result::Result<String, String> {
    for (level, row) in CLT_TABLE {
        for (j, &(num, den)) in row.iter().enumerate() {
            let n = 2 * (j + 1);
            let got = clt_moment(level, n);
            if got != Rational::from_ratio(num, den) {
                return Err(format!("m={level} n={n}: {got} != {num}/{den}"));
            }
        }
    }
    Ok("25 cells exact".into())
}

fn check_three_routes(_: &VerifyConfig) -> std::result::Result<String, String> {
    let mut worst: f64 = 0.0;
    for (level, _) in CLT_TABLE {
        let seq = jacobi_for_m(level);
        let fseq = seq.to_f64();
        let contour = contour_moments(|z: Complex64| cauchy_continued_fraction(&fseq, z), 3.0, 512, 10);
        for (n, c) in contour.iter().enumerate() {
            let counted = clt_moment(level, n);
            let jacobi = moments_from_jacobi(&seq, n);
            if counted != jacobi {
                return Err(format!("m={level} n={n}: count {counted} != Jacobi {jacobi}"));
            }
            worst = worst.max((c - counted.to_f64()).abs());
        }
    }
    ensure(worst <= 1e-9, format!("counts = Jacobi exactly; continued fraction within {worst:.3e}"))
}

fn check_monotone_pairings(_: &VerifyConfig) -> std::result::Result<String, String> {
    for k in 1..=12 {
        if count_onc_pairs(k, Level::MONOTONE) != double_factorial_odd(k) {
            return Err(format!("recurrence differs from (2k−1)!! at k={k}"));
        }
    }
    for k in 1..=6 {
        if count_onc_by_enumeration(2 * k, Level::MONOTONE, true)[k] != double_factorial_odd(k) {
            return Err(format!("enumeration differs from (2k−1)!! at k={k}"));
        }
    }
    Ok("(2k−1)!! for k ≤ 12 by recurrence, k ≤ 6 by enumeration".into())
}

fn check_free_pairings(_: &VerifyConfig) -> std::result::Result<String, String> {
    for k in 1..=12 {
        if count_onc_pairs(k, Level::FREE) != factorial(k) * catalan(k) {
            return Err(format!("free count differs from k!·Catalan at k={k}"));
        }
    }
    Ok("k!·Catalan(k) for k ≤ 12".into())
}

fn check_level_two(_: &VerifyConfig) -> std::result::Result<String, String> {
    let level = Level::Finite(2);
    let summary = MeasureSummary::new(level).map_err(|e| e.to_string())?;
    let atom_mass = (2.0 - 2f64.sqrt()) / 4.0;
    let mass_err = (summary.continuous_mass() + 2.0 * atom_mass - 1.0).abs();
    let location = (2f64.sqrt() + 1.0).sqrt();
    let loc_err = summary
        .atoms
        .iter()
        .map(|a| (a.location.abs() - location).abs())
        .fold(0.0, f64::max);
    let mut moment_err: f64 = 0.0;
    for n in 0..=8 {
        moment_err = moment_err.max((summary.moment(n) - clt_moment(level, n as usize).to_f64()).abs());
    }
    ensure(
        summary.atoms.len() == 2 && mass_err <= 1e-6 && loc_err <= 1e-10 && moment_err <= 1e-6,
        format!("mass error {mass_err:.2e}, atom location error {loc_err:.2e}, moment error {moment_err:.2e}"),
    )
}

fn check_level_three(_: &VerifyConfig) -> std::result::Result<String, String> {
    let level = Level::Finite(3);
    let found = atoms(level).map_err(|e| e.to_string())?;
    let summary = MeasureSummary::new(level).map_err(|e| e.to_string())?;
    let ok = found.len() == 2
        && found.iter().all(|a| (a.location.abs() - 1.685).abs() <= 0.005 && (a.mass - 0.099).abs() <= 0.002)
        && (summary.total_mass() - 1.0).abs() <= 1e-6;
    let first = found.first().map(|a| (a.location.abs(), a.mass)).unwrap_or((f64::NAN, f64::NAN));
    ensure(ok, format!("atoms at ±{:.6} with mass {:.6}, total mass {:.9}", first.0, first.1, summary.total_mass()))
}

fn unit_profile(len: usize) -> SupportProfile<Rational> {
    let f = IntervalIndicator::new(Rational::zero(), Rational::one()).expect("unit interval");
    SupportProfile::new(vec![f; len]).expect("single support")
}

const FOCK_LEVELS: [Level; 3] = [Level::Finite(1), Level::Finite(2), Level::Finite(3)];

fn check_equal_supports(config: &VerifyConfig) -> std::result::Result<String, String> {
    for level in FOCK_LEVELS {
        for n in 1..=2 * config.max_k {
            let p = unit_profile(n);
            let g = gaussian_moment(level, &p);
            let s = partition_sum_moment(level, &p).map_err(|e| e.to_string())?;
            if g != s || g != clt_moment(level, n) {
                return Err(format!("m={level} n={n}: operators {g}, partitions {s}"));
            }
        }
    }
    Ok(format!("operators = partitions = limit moments for n ≤ {}", 2 * config.max_k))
}

fn check_random_profiles(config: &VerifyConfig) -> std::result::Result<String, String> {
    let profiles = corpus::profiles(config.seed, config.profiles, 2 * config.max_k, 3);
    let mut nonzero = 0;
    for p in &profiles {
        for level in FOCK_LEVELS {
            let g = gaussian_moment(level, p);
            let s = partition_sum_moment(level, p).map_err(|e| e.to_string())?;
            if g != s {
                return Err(format!("m={level} profile {p}: operators {g}, partitions {s}"));
            }
            if !g.is_zero() {
                nonzero += 1;
            }
        }
    }
    Ok(format!("{} profiles × 3 levels agree ({nonzero} nonzero)", profiles.len()))
}

fn check_diagram_values(config: &VerifyConfig) -> std::result::Result<String, String> {
    let mut rng = corpus::rng(config.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut count = 0;
    for k in 1..=config.max_k {
        for pi in nc_pair_partitions(k) {
            let intervals = corpus::disjoint_intervals(&mut rng, 3);
            let mut entries = vec![intervals[0].clone(); 2 * k];
            for &(a, b) in pi.pairs() {
                let f = intervals.choose(&mut rng).expect("nonempty").clone();
                entries[a - 1] = f.clone();
                entries[b - 1] = f;
            }
            let profile = SupportProfile::new(entries).map_err(|e| e.to_string())?;
            block_supports(&pi, &profile).map_err(|e| e.to_string())?;
            for level in FOCK_LEVELS {
                let direct = a_pi_expectation(level, &pi, &profile).map_err(|e| e.to_string())?;
                let closed = a_pi_closed_form(level, &pi, &profile).map_err(|e| e.to_string())?;
                if direct != closed {
                    return Err(format!("m={level} π={:?} profile {profile}: {direct} != {closed}", pi.pairs()));
                }
            }
            let colorings = Rational::from_integer(coloring_count(&pi, &profile).map_err(|e| e.to_string())?.into());
            let b: Vec<usize> = profile.pair_multiplicities().expect("paired profile");
            let bfact: num_bigint::BigUint = b.iter().map(|&x| factorial(x)).product();
            let inn = inn_product(&pi, &profile, Level::MONOTONE).map_err(|e| e.to_string())?;
            let predicted = if crate::partitions::admits_coloring(&pi, &profile, Level::MONOTONE).map_err(|e| e.to_string())? {
                Rational::new(bfact.into(), inn.into())
            } else {
                Rational::zero()
            };
            if colorings != predicted {
                return Err(format!("π={:?} profile {profile}: {colorings} colorings, predicted {predicted}", pi.pairs()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} diagrams: operator values and coloring counts match inner-block products"))
}

fn symbolic(word: &str, level: Level) -> std::result::Result<MomentPoly, String> {
    let w = Word::parse(word).map_err(|e| e.to_string())?.map(|c| MomentPoly::constant(c.clone()));
    evaluate_word(&w, level, &SymbolicMarginals).map_err(|e| e.to_string())
}

fn check_state_examples(config: &VerifyConfig) -> std::result::Result<String, String> {
    let v = MomentPoly::var;
    let (a1, b1) = (v(1, 1), v(2, 1));
    let cases = [
        ("a1 a2 a1", Level::MONOTONE, v(1, 2) * v(2, 1)),
        ("a2 a1 a2", Level::MONOTONE, b1.clone() * b1.clone() * a1.clone()),
        (
            "a1 a2 a1 a2",
            Level::Finite(2),
            v(1, 2) * b1.clone() * b1.clone() + v(2, 2) * a1.clone() * a1.clone()
                - a1.clone() * a1.clone() * b1.clone() * b1.clone(),
        ),
        (
            "a1 a2 a1 a2 a1",
            Level::Finite(2),
            a1.clone() * a1.clone() * a1.clone() * v(2, 2) - a1.clone() * a1.clone() * a1.clone() * b1.clone() * b1.clone()
                + v(1, 3) * b1.clone() * b1.clone(),
        ),
        ("u1", Level::MONOTONE, MomentPoly::one()),
    ];
    let mut checked = 0;
    for (word, level, expected) in cases {
        if Word::parse(word).map_err(|e| e.to_string())?.len() > config.len.max(3) {
            continue;
        }
        let got = symbolic(word, level)?;
        if got != expected {
            return Err(format!("φ({word}) at m={level}: {got}, expected {expected}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} closed forms reproduced symbolically"))
}

fn alternating_tuples(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
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

fn check_engines(config: &VerifyConfig) -> std::result::Result<String, String> {
    let mut rng = corpus::rng(config.seed);
    let mut words = 0;
    for level in [Level::MONOTONE, Level::Finite(2), Level::FREE] {
        for _ in 0..3 {
            let specs: Vec<AlgebraSpec<Rational>> =
                (1..=2).map(|i| corpus::discrete_marginal(&mut rng, i, 2 * config.len + 4)).collect();
            let reg = Registry::new(specs).map_err(|e| e.to_string())?;
            let bound = (level == Level::FREE).then_some(config.len / 2);
            let space = ProductSpace::build(level, &reg, bound, DEFAULT_MAX_BASIS).map_err(|e| e.to_string())?;
            for n in 0..=config.len {
                for _ in 0..8 {
                    let word = corpus::random_word(&mut rng, n, &[1, 2], 2);
                    let a = evaluate_word(&word, level, &reg).map_err(|e| e.to_string())?;
                    let b = space.vacuum_moment(&word).map_err(|e| e.to_string())?;
                    if a != b {
                        return Err(format!("m={level} {word}: rewriting {a}, representation {b}"));
                    }
                    words += 1;
                }
            }
        }
    }
    Ok(format!("{words} words agree exactly"))
}

fn check_short_words(config: &VerifyConfig) -> std::result::Result<String, String> {
    let mut count = 0;
    for m in 1..=3u32 {
        for n in 1..=(2 * m as usize).min(config.len) {
            for t in alternating_tuples(n, 3) {
                let w = Word::of_generators(&t).map(|c: &Rational| MomentPoly::constant(c.clone()));
                let a = evaluate_word(&w, Level::Finite(m), &SymbolicMarginals).map_err(|e| e.to_string())?;
                let b = evaluate_word(&w, Level::FREE, &SymbolicMarginals).map_err(|e| e.to_string())?;
                if a != b {
                    return Err(format!("m={m} indices {t:?}: {a} != {b}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} words of length ≤ 2m agree with the free values"))
}

fn check_poisson(_: &VerifyConfig) -> std::result::Result<String, String> {
    for m in [2u32, 3] {
        let level = Level::Finite(m);
        let series = poisson_series(level, 6).map_err(|e| e.to_string())?;
        for n in 0..=6 {
            let direct = poisson_moment(level, n).map_err(|e| e.to_string())?;
            if &direct != series.coefficient(n) {
                return Err(format!("m={m} n={n}: enumeration {direct} != series {}", series.coefficient(n)));
            }
        }
        let second = poisson_moment(level, 2).map_err(|e| e.to_string())?;
        let expected = crate::poly::Polynomial::new(vec![Rational::zero(), Rational::one(), Rational::one()]);
        if second != expected {
            return Err(format!("m={m}: second moment {second}"));
        }
    }
    Ok("moments n ≤ 6 agree as polynomials in λ for m = 2, 3".into())
}

/// Least-squares fit of `e(N) ≈ C/N + D/N²`; returns `C`.
pub fn fit_inverse_n(points: &[(f64, f64)]) -> f64 {
    let (mut s11, mut s12, mut s22, mut r1, mut r2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(n, e) in points {
        let (u, v) = (1.0 / n, 1.0 / (n * n));
        s11 += u * u;
        s12 += u * v;
        s22 += v * v;
        r1 += u * e;
        r2 += v * e;
    }
    (r1 * s22 - r2 * s12) / (s11 * s22 - s12 * s12)
}

fn check_finite_n(_: &VerifyConfig) -> std::result::Result<String, String> {
    let one = Rational::one();
    let half = Rational::from_ratio(1, 2);
    let template = AlgebraSpec::discrete(1, &[(-one.clone(), half.clone()), (one, half)], 8).map_err(|e| e.to_string())?;
    let mut details = Vec::new();
    for m in [1u32, 2] {
        let level = Level::Finite(m);
        for k in [2usize, 3] {
            let sums = OrderPatternSums::new(level, 2 * k, &template).map_err(|e| e.to_string())?;
            let limit = clt_moment(level, 2 * k);
            let mut points = Vec::new();
            for n in [4u64, 8, 16, 32] {
                let v = sums.moment(n).map_err(|e| e.to_string())?;
                let exact = v.exact().ok_or("even moment is rational")?.clone();
                points.push((n as f64, (exact - limit.clone()).to_f64().abs()));
            }
            let c = fit_inverse_n(&points).abs();
            let decreasing = points.windows(2).all(|w| w[1].1 < w[0].1);
            let bounded = points.iter().all(|&(n, e)| e <= c / n * (1.0 + 1e-12));
            if !decreasing || !bounded {
                return Err(format!("m={m} n={}: errors {points:?}, C = {c}", 2 * k));
            }
            details.push(format!("m={m},n={}:C={c:.4}", 2 * k));
        }
    }
    Ok(details.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_scale() {
        let config = VerifyConfig { max_k: 3, len: 4, profiles: 20, ..VerifyConfig::default() };
        for check in run(&Suite::ALL, &config) {
            assert!(check.passed, "{}/{}: {}", check.suite, check.name, check.detail);
            assert!(check.millis.is_none());
        }
    }

    #[test]
    fn fit_recovers_exact_model() {
        let pts: Vec<(f64, f64)> = [4.0, 8.0, 16.0].iter().map(|&n| (n, 3.0 / n - 2.0 / (n * n))).collect();
        assert!((fit_inverse_n(&pts) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(vec![s]));
        }
        assert_eq!(Suite::parse("all").unwrap().len(), 7);
        assert!(Suite::parse("bogus").is_none());
    }
}
