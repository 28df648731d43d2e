//! Randomized structural laws: the polynomial ring axioms the formula code
//! leans on, the exactness tripwire, and the symmetries of the run statistic.

use altruns::oracle::Permutation;
use altruns::poly::IntPolynomial;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-100i64..=100, 0..8).prop_map(IntPolynomial::from)
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|values| Permutation::new(values).expect("shuffle preserves bijectivity"))
}

proptest! {
    #[test]
    fn multiplication_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_distributes_over_addition(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn product_degree_adds(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        prop_assert_eq!((&a * &b).degree(), Some(da + db));
    }

    // Evaluation is an independent route through the arithmetic (Horner on
    // integers), so agreement here cross-checks the coefficient-level ops.
    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), x in -50i64..=50) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn derivative_satisfies_the_product_rule(a in poly(), b in poly()) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_by_powers_of_two_round_trips(a in poly(), e in 0usize..6) {
        let scaled = a.scale(&(BigInt::from(1) << e));
        prop_assert_eq!(scaled.exact_div_pow2(e).unwrap(), a);
    }

    #[test]
    fn odd_coefficient_trips_the_divider(a in poly()) {
        // 2a + 1 has an odd constant term no matter what a is.
        let odd = &a.scale(&BigInt::from(2)) + &IntPolynomial::one();
        let err = odd.exact_div_pow2(1).unwrap_err();
        prop_assert!(err.is_tripwire());
    }

    // Reversal and complement both preserve the set of interior positions
    // where the permutation changes direction.
    #[test]
    fn runs_are_invariant_under_reversal(p in permutation(10)) {
        prop_assert_eq!(p.reversed().count_runs().unwrap(), p.count_runs().unwrap());
    }

    #[test]
    fn runs_are_invariant_under_complement(p in permutation(10)) {
        prop_assert_eq!(p.complemented().count_runs().unwrap(), p.count_runs().unwrap());
    }

    // Reversal swaps ascents and descents, so the two counts partition n−1.
    #[test]
    fn reversal_exchanges_ascents_and_descents(p in permutation(10)) {
        let total = p.count_descents() + p.reversed().count_descents();
        prop_assert_eq!(total, p.len() - 1);
    }
}
