use num_bigint::BigInt;
use proptest::prelude::*;
use sl2_epoly::{IntPoly, MonodromyRep2, MonodromyRep4};

fn arb_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((0usize..12, -50i64..50), 0..6).prop_map(IntPoly::from_terms)
}

fn arb_nonzero_poly() -> impl Strategy<Value = IntPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_rep4() -> impl Strategy<Value = MonodromyRep4> {
    (arb_poly(), arb_poly(), arb_poly(), arb_poly())
        .prop_map(|(a, b, c, d)| MonodromyRep4::new(a, b, c, d))
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, IntPoly::zero());
        prop_assert_eq!(&a * &IntPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), x in -20i64..20) {
        prop_assert_eq!((&a + &b).eval_i64(x), a.eval_i64(x) + b.eval_i64(x));
        prop_assert_eq!((&a * &b).eval_i64(x), a.eval_i64(x) * b.eval_i64(x));
    }

    #[test]
    fn pow_matches_repeated_product(a in arb_poly(), n in 0u32..5) {
        let mut want = IntPoly::one();
        for _ in 0..n {
            want = &want * &a;
        }
        prop_assert_eq!(a.pow(n), want);
    }

    #[test]
    fn json_round_trip(a in arb_poly()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), a);
    }

    #[test]
    fn reversal_is_an_involution(a in arb_poly()) {
        let d = a.degree().unwrap_or(0) + 2;
        prop_assert_eq!(a.reversed(d).unwrap().reversed(d).unwrap(), a.clone());
        let sym = &a + &a.reversed(d).unwrap();
        prop_assert!(sym.is_palindromic(d).unwrap());
    }

    #[test]
    fn tensor_is_commutative_associative_unital(x in arb_rep4(), y in arb_rep4(), z in arb_rep4()) {
        prop_assert_eq!(x.tensor(&y), y.tensor(&x));
        prop_assert_eq!(x.tensor(&y).tensor(&z), x.tensor(&y.tensor(&z)));
        prop_assert_eq!(x.tensor(&MonodromyRep4::trivial()), x);
    }

    #[test]
    fn twist_is_an_involutive_ring_automorphism(x in arb_rep4(), y in arb_rep4()) {
        prop_assert_eq!(x.twist().twist(), x.clone());
        prop_assert_eq!(x.tensor(&y).twist(), x.twist().tensor(&y.twist()));
        prop_assert_eq!((&x + &y).twist(), &x.twist() + &y.twist());
    }

    #[test]
    fn push_is_a_ring_homomorphism(x in arb_rep4(), y in arb_rep4()) {
        prop_assert_eq!(x.tensor(&y).push_to_rep2(), x.push_to_rep2().tensor(&y.push_to_rep2()));
        prop_assert_eq!(x.twist().push_to_rep2(), x.push_to_rep2());
        prop_assert_eq!(x.push_to_rep2().fiber_epoly(), x.fiber_epoly());
    }

    #[test]
    fn rep2_tensor_is_commutative(a in arb_poly(), b in arb_poly(), c in arb_poly(), d in arb_poly()) {
        let (x, y) = (MonodromyRep2::new(a, b), MonodromyRep2::new(c, d));
        prop_assert_eq!(x.tensor(&y), y.tensor(&x));
        prop_assert_eq!(x.tensor(&MonodromyRep2::trivial()), x);
    }

    #[test]
    fn scaling_matches_constant_multiplication(a in arb_poly(), k in -1000i64..1000) {
        prop_assert_eq!(a.scale(k), &a * &IntPoly::constant(BigInt::from(k)));
    }
}
