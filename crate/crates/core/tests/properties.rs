//! Property-based checks of the polynomial core: ring axioms, evaluation
//! as a ring homomorphism, reversal, exact division, gcd, and content.

use lacunary::binomial_gcd::{fold_binomial_gcd, SignedBinomial};
use lacunary::{BigInt, SparsePoly};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((0u64..=12, -20i64..=20), 0..=6).prop_map(|terms| {
        SparsePoly::new(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = SparsePoly> {
    arb_poly().prop_filter("nonzero", |f| !f.is_zero())
}

/// Nonzero with a nonzero constant term, the shape reversal preserves.
fn arb_based_poly() -> impl Strategy<Value = SparsePoly> {
    (arb_poly(), 1i64..=9, prop::bool::ANY).prop_map(|(f, c, neg)| {
        let c0 = if neg { -c } else { c };
        let without_const = &f - &SparsePoly::constant(f.constant_term());
        &without_const + &SparsePoly::constant(BigInt::from(c0))
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn additive_and_multiplicative_identities(f in arb_poly()) {
        prop_assert_eq!(&f + &SparsePoly::zero(), f.clone());
        prop_assert_eq!(&f * &SparsePoly::one(), f.clone());
        prop_assert!((&f - &f).is_zero());
        prop_assert!((&f + &(-&f)).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in arb_poly(), g in arb_poly(), t in -5i64..=5) {
        let t = BigInt::from(t);
        prop_assert_eq!((&f + &g).evaluate(&t), f.evaluate(&t) + g.evaluate(&t));
        prop_assert_eq!((&f * &g).evaluate(&t), f.evaluate(&t) * g.evaluate(&t));
    }

    #[test]
    fn reversal_is_an_involution_and_multiplicative(f in arb_based_poly(), g in arb_based_poly()) {
        let rf = f.reciprocal().unwrap();
        prop_assert_eq!(rf.reciprocal().unwrap(), f.clone());
        let fg = &f * &g;
        let rfg = fg.reciprocal().unwrap();
        prop_assert_eq!(rfg, &rf * &g.reciprocal().unwrap());
    }

    #[test]
    fn exact_division_inverts_multiplication(q in arb_poly(), g in arb_nonzero_poly()) {
        let f = &q * &g;
        prop_assert_eq!(f.exact_divide(&g), Some(q));
    }

    #[test]
    fn gcd_divides_both_arguments(f in arb_nonzero_poly(), g in arb_nonzero_poly()) {
        let h = SparsePoly::gcd(&f, &g);
        prop_assert!(!h.is_zero());
        prop_assert!(f.exact_divide(&h).is_some(), "gcd {} must divide {}", h, f);
        prop_assert!(g.exact_divide(&h).is_some(), "gcd {} must divide {}", h, g);
    }

    #[test]
    fn gcd_catches_constructed_common_factors(
        f in arb_nonzero_poly(),
        g in arb_nonzero_poly(),
        w in arb_nonzero_poly(),
    ) {
        let h = SparsePoly::gcd(&(&f * &w), &(&g * &w));
        let (_, w_prim) = w.content_primitive();
        prop_assert!(
            h.exact_divide(&w_prim).is_some(),
            "gcd {} must be divisible by the common factor {}",
            h,
            w_prim
        );
    }

    #[test]
    fn content_times_primitive_reassembles(f in arb_nonzero_poly()) {
        let (content, prim) = f.content_primitive();
        prop_assert_eq!(prim.scale(&content), f.clone());
        let (unit, again) = prim.content_primitive();
        prop_assert!(unit.is_one());
        prop_assert_eq!(again, prim.clone());
        prop_assert!(prim.leading_coeff().unwrap().is_positive());
    }

    #[test]
    fn inflation_matches_exponent_substitution(f in arb_poly(), k in 1u64..=4, t in -3i64..=3) {
        let inflated = f.inflate(k);
        let t = BigInt::from(t);
        prop_assert_eq!(inflated.evaluate(&t), f.evaluate(&t.pow(k as u32)));
    }

    #[test]
    fn binomial_fold_ignores_order(
        binomials in prop::collection::vec(
            (1u64..=30, prop::bool::ANY),
            1..=6,
        ).prop_shuffle()
    ) {
        let items: Vec<SignedBinomial> = binomials
            .iter()
            .map(|(e, neg)| SignedBinomial { exponent: *e, sign: if *neg { -1 } else { 1 } })
            .collect();
        let mut sorted = items.clone();
        sorted.sort_by_key(|b| (b.exponent, b.sign));
        prop_assert_eq!(fold_binomial_gcd(items), fold_binomial_gcd(sorted));
    }
}
