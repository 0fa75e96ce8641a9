use std::cmp::Ordering;

use modbb::ring::{rat, BaseOrder, ModuleExtension, ModuleTerm, Poly, Rat, Term, TermOrder, VecP};
use num_bigint::BigInt;
use proptest::prelude::*;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn term() -> impl Strategy<Value = Term> {
    prop::collection::vec(0u32..4, 3).prop_map(Term::new)
}

fn module_term() -> impl Strategy<Value = ModuleTerm> {
    (term(), 0usize..3).prop_map(|(t, k)| ModuleTerm::new(t, k))
}

fn order() -> impl Strategy<Value = TermOrder> {
    (
        prop::sample::select(vec![BaseOrder::DegRevLex, BaseOrder::DegLex, BaseOrder::Lex]),
        prop::sample::select(vec![ModuleExtension::SigmaPos, ModuleExtension::PosSigma]),
    )
        .prop_map(|(b, e)| TermOrder::new(b).with_extension(e))
}

fn coeff() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((term(), coeff()), 0..4).prop_map(|ts| Poly::from_terms(3, ts))
}

fn vector() -> impl Strategy<Value = VecP> {
    prop::collection::vec((module_term(), coeff()), 0..5).prop_map(|ts| VecP::from_terms(3, 3, ts))
}

proptest! {
    #[test]
    fn rationals_are_reduced(n in -1000i64..1000, d in (-1000i64..1000).prop_filter("nonzero", |d| *d != 0)) {
        let r = rat(n, d);
        let g = gcd(n, d);
        let sign = if d < 0 { -1 } else { 1 };
        prop_assert_eq!(r.numer(), &BigInt::from(sign * n / g));
        prop_assert_eq!(r.denom(), &BigInt::from(d.abs() / g));
        prop_assert!(*r.denom() > BigInt::from(0));
    }

    #[test]
    fn orders_are_total_and_multiplicative(o in order(), a in module_term(), b in module_term(), c in module_term(), t in term()) {
        prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
        if o.cmp(&a, &b) == Ordering::Greater && o.cmp(&b, &c) == Ordering::Greater {
            prop_assert_eq!(o.cmp(&a, &c), Ordering::Greater);
        }
        prop_assert_eq!(o.cmp(&a.mul_term(&t), &b.mul_term(&t)), o.cmp(&a, &b));
        prop_assert_eq!(o.key(&a).cmp(&o.key(&b)), o.cmp(&a, &b));
        // 1 is the smallest term
        prop_assert_ne!(o.cmp_terms(&t, &Term::one(3)), Ordering::Less);
    }

    #[test]
    fn scalar_multiplication_distributes(v in vector(), w in vector(), p in poly(), q in poly()) {
        prop_assert_eq!((&v + &w).mul_poly(&p), &v.mul_poly(&p) + &w.mul_poly(&p));
        prop_assert_eq!(v.mul_poly(&(&p + &q)), &v.mul_poly(&p) + &v.mul_poly(&q));
        prop_assert_eq!(v.mul_poly(&(&p * &q)), v.mul_poly(&q).mul_poly(&p));
        prop_assert!((&v - &v).is_zero());
    }

    #[test]
    fn leading_terms_are_multiplicative(o in order(), v in vector(), t in term()) {
        prop_assume!(!v.is_zero());
        let (lt, lc) = v.leading_term(&o).unwrap();
        let (lt2, lc2) = v.mul_term(&t).leading_term(&o).unwrap();
        prop_assert_eq!(lt2, lt.mul_term(&t));
        prop_assert_eq!(lc2, lc);
    }
}
