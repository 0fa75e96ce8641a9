mod common;

use std::collections::BTreeSet;

use modbb::ordstruct::OrderModule;
use modbb::random;
use modbb::ring::{terms_up_to_degree, ModuleTerm, Term, VecP};
use proptest::prelude::*;

/// Borders built layer by layer: `∂^k = x·∂^{k-1} \ (∂^0 ∪ ... ∪ ∂^{k-1})`,
/// with `∂^1 = {1}` for an empty ideal.
fn layered_borders(om: &OrderModule, upto: u32) -> Vec<BTreeSet<ModuleTerm>> {
    let n = om.nvars();
    let mut layers: Vec<BTreeSet<ModuleTerm>> = vec![om.terms().iter().cloned().collect()];
    for k in 1..=upto {
        let mut next = BTreeSet::new();
        for c in 0..om.rank() {
            if k == 1 && om.ideals()[c].is_empty() {
                next.insert(ModuleTerm::new(Term::one(n), c));
            }
        }
        for t in &layers[k as usize - 1] {
            for s in 0..n {
                let u = t.mul_var(s);
                if !layers.iter().any(|l| l.contains(&u)) {
                    next.insert(u);
                }
            }
        }
        layers.push(next);
    }
    layers
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn borders_are_disjoint_and_cover(seed in any::<u64>(), rank in 1usize..=3) {
        let space = common::space(rank);
        let om = random::random_order_module(&mut common::rng(seed), &space, 3);
        let layers = layered_borders(&om, 4);
        for k in 0..=4u32 {
            let got: BTreeSet<ModuleTerm> = om.border(k).into_iter().collect();
            prop_assert_eq!(&got, &layers[k as usize], "border {}", k);
            let closure: BTreeSet<ModuleTerm> = om.border_closure(k).into_iter().collect();
            let union: BTreeSet<ModuleTerm> = layers[..=k as usize].iter().flatten().cloned().collect();
            prop_assert_eq!(closure, union);
        }
        for a in 0..layers.len() {
            for b in a + 1..layers.len() {
                prop_assert!(layers[a].is_disjoint(&layers[b]));
            }
        }
        // every term of degree at most D lies in exactly one layer with index at most D + 1
        let d = 2;
        let deep = layered_borders(&om, d + 1);
        for t in terms_up_to_degree(2, d) {
            for c in 0..rank {
                let u = ModuleTerm::new(t.clone(), c);
                let hits: Vec<usize> = (0..deep.len()).filter(|&i| deep[i].contains(&u)).collect();
                prop_assert_eq!(hits.len(), 1);
                prop_assert_eq!(hits[0] as u32, om.index(&u).unwrap());
            }
        }
    }

    #[test]
    fn factorization_through_the_border(seed in any::<u64>(), e in prop::collection::vec(0u32..5, 2), c in 0usize..2) {
        let om = random::random_order_module(&mut common::rng(seed), &common::space(2), 2);
        let t = ModuleTerm::new(Term::new(e), c);
        let ind = om.index(&t).unwrap();
        match om.factor_through_border(&t) {
            Ok((s, j)) => {
                let b = &om.border_terms()[j];
                prop_assert_eq!(b.mul_term(&s), t.clone());
                prop_assert_eq!(s.degree() + 1, ind);
            }
            Err(_) => prop_assert_eq!(ind, 0),
        }
    }

    #[test]
    fn index_is_subadditive(seed in any::<u64>()) {
        let space = common::space(2);
        let mut rng = common::rng(seed);
        let om = random::random_order_module(&mut rng, &space, 2);
        let v = random::random_vector(&mut rng, &space, 3, 4);
        let w = random::random_vector(&mut rng, &space, 3, 4);
        let p = random::random_poly(&mut rng, 2, 2, 3);
        prop_assume!(!v.is_zero() && !w.is_zero());
        let (iv, iw) = (om.index_vec(&v).unwrap(), om.index_vec(&w).unwrap());
        let sum: VecP = &v + &w;
        if !sum.is_zero() {
            prop_assert!(om.index_vec(&sum).unwrap() <= iv.max(iw));
        }
        let pv = v.mul_poly(&p);
        if !pv.is_zero() {
            prop_assert!(om.index_vec(&pv).unwrap() <= p.degree().unwrap() + iv);
        }
        let t = random::random_term(&mut rng, 2, 3);
        for u in v.support() {
            prop_assert!(om.index(&u.mul_term(&t)).unwrap() <= t.degree() + om.index(u).unwrap());
        }
    }

    #[test]
    fn corners_generate_the_complement(seed in any::<u64>()) {
        let om = random::random_order_module(&mut common::rng(seed), &common::space(2), 3);
        let corners = om.corners();
        for t in om.border(1).into_iter().chain(om.border(2)) {
            prop_assert!(corners.iter().any(|c| c.divides(&t)), "{} has no corner below it", t);
        }
        for c in &corners {
            for d in &corners {
                prop_assert!(c == d || !c.divides(d));
            }
        }
    }
}
