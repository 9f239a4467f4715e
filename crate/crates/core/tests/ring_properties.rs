//! Property tests for the polynomial ring: the axioms on random small
//! polynomials, exactness of division against multiplication, the degree
//! law, and evaluation as a ring homomorphism.

use fibsum_core::PolyX;
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = PolyX> {
    prop::collection::vec(-99i64..=99, 0..=9).prop_map(|v| PolyX::from_i64s(&v))
}

fn arb_nonzero_poly() -> impl Strategy<Value = PolyX> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn sub_is_add_neg(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.sub(&b).add(&b), a);
    }

    #[test]
    fn exact_div_inverts_mul(a in arb_poly(), b in arb_nonzero_poly()) {
        prop_assert_eq!(a.mul(&b).exact_div(&b), Ok(a));
    }

    #[test]
    fn degree_adds_under_mul(a in arb_nonzero_poly(), b in arb_nonzero_poly()) {
        let expected = a.degree().unwrap() + b.degree().unwrap();
        prop_assert_eq!(a.mul(&b).degree(), Some(expected));
    }

    #[test]
    fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), x0 in -50i64..=50) {
        let x0 = BigInt::from(x0);
        prop_assert_eq!(
            a.mul(&b).eval_int(&x0),
            a.eval_int(&x0) * b.eval_int(&x0)
        );
        prop_assert_eq!(
            a.add(&b).eval_int(&x0),
            a.eval_int(&x0) + b.eval_int(&x0)
        );
    }

    #[test]
    fn derivative_is_leibniz(a in arb_poly(), b in arb_poly()) {
        let lhs = a.mul(&b).derivative();
        let rhs = a.derivative().mul(&b).add(&a.mul(&b.derivative()));
        prop_assert_eq!(lhs, rhs);
    }
}
