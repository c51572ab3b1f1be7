use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use pfaffschub::polyring::{Coeff, Monomial, Polynomial, TermOrder, Var};
use proptest::prelude::*;

fn var() -> impl Strategy<Value = Var> {
    (1usize..=4, 1usize..=4).prop_map(|(i, j)| Var::new(i, j))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), 0u32..=2), 0..4).prop_map(Monomial::from_pairs)
}

fn coeff() -> impl Strategy<Value = Coeff> {
    (-20i64..=20, 1i64..=5).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), coeff()), 0..5).prop_map(Polynomial::from_terms)
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::RevLex), Just(TermOrder::DegLex)]
}

proptest! {
    #[test]
    fn addition_is_associative_and_commutative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), Polynomial::zero());
    }

    #[test]
    fn multiplication_is_associative_and_distributive(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn large_coefficients_do_not_overflow(a in poly(), b in poly()) {
        let big = BigRational::from_integer(BigInt::from(10u8).pow(40));
        let lhs = &(&a * &b).scale(&big) * &Polynomial::constant(big.clone());
        let rhs = &a.scale(&big) * &b.scale(&big);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn term_orders_are_total_and_multiplicative(
        o in order(), a in monomial(), b in monomial(), c in monomial()
    ) {
        let ab = o.compare(&a, &b);
        prop_assert_eq!(ab, o.compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_ne!(o.compare(&Monomial::one(), &a), Ordering::Greater);
        prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
        if ab != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn leading_monomial_of_product_is_product_of_leading_monomials(
        o in order(), a in poly(), b in poly()
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let lm = (&a * &b).leading_monomial(o).unwrap();
        prop_assert_eq!(lm, a.leading_monomial(o).unwrap().mul(&b.leading_monomial(o).unwrap()));
    }

    #[test]
    fn text_and_json_round_trip(o in order(), a in poly()) {
        prop_assert_eq!(Polynomial::parse(&a.to_text(o)).unwrap(), a.clone());
        let json = a.to_json(o).to_string();
        prop_assert_eq!(Polynomial::from_json(&json).unwrap(), a.clone());
        let terms = a.to_json_terms(o);
        prop_assert_eq!(Polynomial::from_json_terms(&terms).unwrap(), a);
    }

    #[test]
    fn monomial_lcm_gcd(a in monomial(), b in monomial()) {
        let l = a.lcm(&b);
        let g = a.gcd(&b);
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!(l.mul(&g), a.mul(&b));
        prop_assert_eq!(a.is_coprime(&b), g.is_one());
    }
}
