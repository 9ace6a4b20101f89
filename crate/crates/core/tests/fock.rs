use monohier::corpus;
use monohier::fock::{annihilate, create, gaussian_moment, inner, PiecewisePolynomial, TensorState};
use monohier::partitions::{IntervalIndicator, SupportProfile};
use monohier::poly::Polynomial;
use monohier::{Level, Rational};
use proptest::prelude::*;

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn level_strategy() -> impl Strategy<Value = Level> {
    prop_oneof![Just(Level::Finite(1)), Just(Level::Finite(2)), Just(Level::Finite(3)), Just(Level::Infinite)]
}

/// Half-integer interval `(a/2, (a+w)/2]`.
fn interval() -> impl Strategy<Value = IntervalIndicator<Rational>> {
    (0i64..6, 1i64..4).prop_map(|(a, w)| IntervalIndicator::new(q(a, 2), q(a + w, 2)).unwrap())
}

fn piecewise() -> impl Strategy<Value = PiecewisePolynomial<Rational>> {
    (0i64..4, prop::collection::vec((1i64..3, prop::collection::vec(-3i64..4, 1..3)), 1..4)).prop_map(|(start, pieces)| {
        let mut breaks = vec![q(start, 1)];
        let mut polys = Vec::new();
        for (w, coeffs) in pieces {
            let last = breaks.last().unwrap().clone();
            breaks.push(last + q(w, 2));
            polys.push(Polynomial::new(coeffs.into_iter().map(|c| q(c, 1)).collect()));
        }
        PiecewisePolynomial::new(breaks, polys)
    })
}

/// A state reached from the vacuum by a few operator applications.
fn state(level: Level) -> impl Strategy<Value = TensorState<Rational>> {
    prop::collection::vec((any::<bool>(), interval(), -2i64..3), 0..5).prop_map(move |ops| {
        let mut v = TensorState::vacuum();
        for (creating, f, c) in ops {
            let next = if creating { create(level, &f, &v) } else { annihilate(level, &f, &v) };
            v = v.add(&next.scale(&q(c, 1)));
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn creation_is_adjoint_to_annihilation(
        (level, u, v, f) in level_strategy().prop_flat_map(|l| (Just(l), state(l), state(l), interval()))
    ) {
        let left = inner(level, &create(level, &f, &u), &v);
        let right = inner(level, &u, &annihilate(level, &f, &v));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inner_product_is_symmetric((level, u, v) in level_strategy().prop_flat_map(|l| (Just(l), state(l), state(l)))) {
        prop_assert_eq!(inner(level, &u, &v), inner(level, &v, &u));
    }

    #[test]
    fn cumulative_integrals_are_fubini(g in piecewise(), h in piecewise()) {
        // ∫ g(x) ∫_{y>x} h(y) dy dx  =  ∫ h(y) ∫_{x<y} g(x) dx dy
        prop_assert_eq!(h.tail_times(&g).integral(), g.head_times(&h).integral());
    }

    #[test]
    fn integral_splits_at_any_point(g in piecewise(), c in 0i64..12) {
        let c = q(c, 2);
        prop_assert_eq!(g.integral_above(&c) + g.integral_below(&c), g.integral());
    }

    #[test]
    fn multiplication_is_pointwise(g in piecewise(), h in piecewise(), x in 0i64..24) {
        let x = q(x, 4);
        prop_assert_eq!(g.mul(&h).eval(&x), g.eval(&x) * h.eval(&x));
        prop_assert_eq!(g.add(&h).eval(&x), g.eval(&x) + h.eval(&x));
        prop_assert_eq!(g.mul(&h), h.mul(&g));
    }

    #[test]
    fn moments_are_reversal_invariant(seed in any::<u64>(), level in level_strategy()) {
        let p = &corpus::profiles(seed, 1, 6, 3)[0];
        let reversed = SupportProfile::new(p.entries().iter().rev().cloned().collect()).unwrap();
        prop_assert_eq!(gaussian_moment(level, p), gaussian_moment(level, &reversed));
    }
}
