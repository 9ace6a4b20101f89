//! Vacuum moments of creation, annihilation and Gaussian operators, and the
//! partition sums they are compared against.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::level::Level;
use crate::partitions::{
    admits_coloring, block_supports, compatible, enumerate_onc, factorial, inn_count_at, nc_pair_partitions,
    IntervalIndicator, PairPartition, SupportProfile,
};
use crate::scalar::Scalar;

use super::tensor::{annihilate, create, TensorState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Create,
    Annihilate,
}

/// Product `a^{ε_1}(f_1) … a^{ε_n}(f_n)`, applied right to left.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonWord<S> {
    letters: Vec<(Epsilon, IntervalIndicator<S>)>,
}

impl<S: Scalar> EpsilonWord<S> {
    pub fn new(letters: Vec<(Epsilon, IntervalIndicator<S>)>) -> Self {
        EpsilonWord { letters }
    }

    /// Word of a pair partition: each block creates at its later point and
    /// annihilates at its earlier one.
    pub fn from_pair_partition(pi: &PairPartition, profile: &SupportProfile<S>) -> Result<Self> {
        block_supports(pi, profile)?;
        let mut letters: Vec<(Epsilon, IntervalIndicator<S>)> =
            (1..=pi.n()).map(|p| (Epsilon::Create, profile.at(p).clone())).collect();
        for &(p, _) in pi.pairs() {
            letters[p - 1].0 = Epsilon::Annihilate;
        }
        Ok(EpsilonWord { letters })
    }

    pub fn letters(&self) -> &[(Epsilon, IntervalIndicator<S>)] {
        &self.letters
    }

    pub fn apply(&self, level: Level, v: &TensorState<S>) -> TensorState<S> {
        let mut state = v.clone();
        for (e, f) in self.letters.iter().rev() {
            state = match e {
                Epsilon::Create => create(level, f, &state),
                Epsilon::Annihilate => annihilate(level, f, &state),
            };
            if state.is_zero() {
                break;
            }
        }
        state
    }
}

/// `⟨a_π Ω, Ω⟩` by applying the operators.
pub fn a_pi_expectation<S: Scalar>(level: Level, pi: &PairPartition, profile: &SupportProfile<S>) -> Result<S> {
    let word = EpsilonWord::from_pair_partition(pi, profile)?;
    Ok(word.apply(level, &TensorState::vacuum()).vacuum_coeff().clone())
}

/// `Π_i (t_i − s_i)/(Inn(π_i) + 1)` with the inner count taken from depth `m`;
/// zero when the nesting contradicts the order of supports.
pub fn a_pi_closed_form<S: Scalar>(level: Level, pi: &PairPartition, profile: &SupportProfile<S>) -> Result<S> {
    if !admits_coloring(pi, profile, level)? {
        return Ok(S::zero());
    }
    let mut acc = S::one();
    for (i, &(p, _)) in pi.pairs().iter().enumerate() {
        let inn = inn_count_at(pi, profile, i, level)?;
        acc = acc * profile.at(p).length() / S::from_usize(inn + 1);
    }
    Ok(acc)
}

/// `φ(ω(f_1) … ω(f_n))` for `ω = a + a*`, by operator calculus.
pub fn gaussian_moment<S: Scalar>(level: Level, profile: &SupportProfile<S>) -> S {
    let mut state = TensorState::vacuum();
    for (remaining, f) in profile.entries().iter().enumerate().rev() {
        let next = create(level, f, &state).add(&annihilate(level, f, &state));
        // Tensors longer than the number of letters left cannot return to Ω.
        state = next.truncated(remaining);
    }
    state.vacuum_coeff().clone()
}

fn pair_weight_denominator<S: Scalar>(profile: &SupportProfile<S>) -> Option<S> {
    let b = profile.pair_multiplicities()?;
    let d: BigUint = b.iter().map(|&k| factorial(k)).product();
    Some(S::from_bigint(&d.into()))
}

/// `(1/Π b_j!) Σ_P Π ⟨f_α, f_β⟩` over ordered non-crossing pair partitions
/// monotone from depth `m` and compatible with the profile.
pub fn partition_sum_moment<S: Scalar>(level: Level, profile: &SupportProfile<S>) -> Result<S> {
    let n = profile.len();
    let Some(denominator) = pair_weight_denominator(profile) else {
        return Ok(S::zero());
    };
    if n % 2 == 1 {
        return Ok(S::zero());
    }
    let mut sum = S::zero();
    for p in enumerate_onc(n, level, true) {
        if !compatible(&p, profile)? {
            continue;
        }
        let w = p
            .blocks()
            .iter()
            .fold(S::one(), |acc, b| acc * profile.at(b[0]).pairing(profile.at(b[1])));
        sum = sum + w;
    }
    Ok(sum / denominator)
}

/// The same sum regrouped by unordered diagrams: `Σ_π Π (t_i − s_i)/(Inn(π_i) + 1)`.
pub fn partition_sum_by_inner_blocks<S: Scalar>(level: Level, profile: &SupportProfile<S>) -> Result<S> {
    let n = profile.len();
    if n % 2 == 1 {
        return Ok(S::zero());
    }
    let mut sum = S::zero();
    for pi in nc_pair_partitions(n / 2) {
        match block_supports(&pi, profile) {
            Ok(_) => sum = sum + a_pi_closed_form(level, &pi, profile)?,
            Err(Error::InconsistentProfile(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::PairPartition;
    use crate::spectra::clt_moment;
    use crate::Rational;
    use num_traits::{One, Zero};

    fn profile(text: &str) -> SupportProfile<Rational> {
        SupportProfile::parse(text).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn single_pair() {
        let pi = PairPartition::new(vec![(1, 2)]).unwrap();
        let p = profile("1/2:3,1/2:3");
        assert_eq!(a_pi_expectation(Level::MONOTONE, &pi, &p).unwrap(), q(5, 2));
        assert_eq!(partition_sum_moment(Level::MONOTONE, &p).unwrap(), q(5, 2));
        assert_eq!(gaussian_moment(Level::MONOTONE, &p), q(5, 2));
    }

    #[test]
    fn two_level_nested_diagram() {
        // t = 2, t' = 5: t²(t'−t)²/2 = 18.
        let pi = PairPartition::new(vec![(1, 8), (2, 3), (4, 7), (5, 6)]).unwrap();
        let p = profile("0:2,2:5,2:5,0:2,2:5,2:5,0:2,0:2");
        assert_eq!(a_pi_expectation(Level::MONOTONE, &pi, &p).unwrap(), q(18, 1));
        assert_eq!(a_pi_closed_form(Level::MONOTONE, &pi, &p).unwrap(), q(18, 1));
    }

    #[test]
    fn nested_diagram_gives_inverse_factorial() {
        for k in 1..=5usize {
            let pi = PairPartition::new((1..=k).map(|j| (j, 2 * k + 1 - j)).collect()).unwrap();
            let p = SupportProfile::new(vec![IntervalIndicator::new(q(0, 1), q(1, 1)).unwrap(); 2 * k]).unwrap();
            let expected = Rational::one() / Rational::from_integer(factorial(k).into());
            assert_eq!(a_pi_expectation(Level::MONOTONE, &pi, &p).unwrap(), expected);
        }
    }

    #[test]
    fn gaussian_moments_match_limit_law() {
        for level in [Level::MONOTONE, Level::Finite(2), Level::Finite(3)] {
            for k in 1..=4usize {
                let p = SupportProfile::new(vec![IntervalIndicator::new(q(0, 1), q(1, 1)).unwrap(); 2 * k]).unwrap();
                let g = gaussian_moment(level, &p);
                assert_eq!(g, clt_moment(level, 2 * k), "{level} k={k}");
                assert_eq!(partition_sum_moment(level, &p).unwrap(), g);
                assert_eq!(partition_sum_by_inner_blocks(level, &p).unwrap(), g);
            }
        }
        let odd = profile("0:1,0:1,0:1");
        assert!(gaussian_moment(Level::MONOTONE, &odd).is_zero());
        assert!(partition_sum_moment(Level::MONOTONE, &odd).unwrap().is_zero());
    }

    #[test]
    fn mixed_supports_agree() {
        for text in [
            "0:2,2:5,2:5,0:2,2:5,2:5,0:2,0:2",
            "0:1,1:3,1:3,0:1",
            "1:3,0:1,0:1,1:3",
            "0:1,1:2,0:1,1:2",
            "0:1,0:1,1:2,1:2,2:4,2:4",
            "2:4,0:1,1:2,1:2,0:1,2:4",
        ] {
            let p = profile(text);
            for level in [Level::MONOTONE, Level::Finite(2), Level::Finite(3)] {
                let g = gaussian_moment(level, &p);
                assert_eq!(partition_sum_moment(level, &p).unwrap(), g, "{text} {level}");
                assert_eq!(partition_sum_by_inner_blocks(level, &p).unwrap(), g, "{text} {level}");
            }
        }
    }
}
