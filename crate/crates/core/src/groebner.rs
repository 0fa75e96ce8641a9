//! Buchberger's algorithm for submodules of `P^r`, normal forms, Macaulay
//! complements, the Gröbner-based border basis, syzygies and intersections.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::ordstruct::OrderModule;
use crate::prebasis::{BorderBasis, Prebasis};
use crate::ring::{BaseOrder, FreeModule, ModuleExtension, ModuleTerm, Poly, Rat, Term, TermOrder, VecP};

/// A monic basis element with its leading term cached.
#[derive(Clone, Debug)]
struct Elem {
    v: VecP,
    lt: ModuleTerm,
}

impl Elem {
    fn new(v: VecP, order: &TermOrder) -> Self {
        let v = v.monic(order);
        let lt = v.leading(order).expect("nonzero").0.clone();
        Elem { v, lt }
    }
}

/// Full reduction of `v` modulo monic elements with cached leading terms.
fn reduce(v: &VecP, basis: &[Elem], order: &TermOrder) -> VecP {
    let mut work: BTreeMap<Vec<i64>, (ModuleTerm, Rat)> =
        v.iter().map(|(t, c)| (order.key(t), (t.clone(), c.clone()))).collect();
    let mut rem = VecP::zero(v.nvars(), v.rank());
    while let Some((_, (t, c))) = work.pop_last() {
        let Some(g) = basis.iter().find(|g| g.lt.divides(&t)) else {
            rem.add_term(t, c);
            continue;
        };
        let shift = t.term.quot(&g.lt.term).expect("divides");
        for (s, a) in g.v.iter() {
            if *s == g.lt {
                continue;
            }
            let u = s.mul_term(&shift);
            let d = -(&c * a);
            match work.entry(order.key(&u)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert((u, d));
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    e.get_mut().1 += d;
                    if e.get().1.is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: ModuleTerm,
}

fn lcm(a: &ModuleTerm, b: &ModuleTerm) -> Option<ModuleTerm> {
    (a.component == b.component).then(|| ModuleTerm::new(a.term.lcm(&b.term), a.component))
}

/// Reduced Gröbner basis of the submodule generated by `gens`, monic and
/// sorted by descending leading term. Zero generators are ignored.
pub fn groebner_basis(gens: &[VecP], order: &TermOrder) -> Vec<VecP> {
    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |h: VecP, basis: &mut Vec<Elem>, pairs: &mut Vec<Pair>| {
        let e = Elem::new(h, order);
        let k = basis.len();
        // chain criterion: (i, j) is redundant once LT(h) | lcm(i, j) strictly
        pairs.retain(|p| {
            if !e.lt.divides(&p.lcm) {
                return true;
            }
            let li = lcm(&basis[p.i].lt, &e.lt);
            let lj = lcm(&basis[p.j].lt, &e.lt);
            li.as_ref() == Some(&p.lcm) || lj.as_ref() == Some(&p.lcm)
        });
        for (i, b) in basis.iter().enumerate() {
            if let Some(l) = lcm(&b.lt, &e.lt) {
                pairs.push(Pair { i, j: k, lcm: l });
            }
        }
        basis.push(e);
    };

    for g in gens {
        let h = reduce(g, &basis, order);
        if !h.is_zero() {
            add(h, &mut basis, &mut pairs);
        }
    }
    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
            .expect("nonempty");
        let p = pairs.swap_remove(pick);
        let (gi, gj) = (&basis[p.i], &basis[p.j]);
        let mut s = gi.v.mul_term(&p.lcm.term.quot(&gi.lt.term).expect("lcm"));
        s.add_scaled(&-Rat::one(), &p.lcm.term.quot(&gj.lt.term).expect("lcm"), &gj.v);
        let h = reduce(&s, &basis, order);
        if !h.is_zero() {
            add(h, &mut basis, &mut pairs);
        }
    }
    interreduce(basis, order)
}

fn interreduce(basis: Vec<Elem>, order: &TermOrder) -> Vec<VecP> {
    let mut minimal: Vec<Elem> = Vec::new();
    for (k, e) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, f)| {
            l != k && f.lt.divides(&e.lt) && (f.lt != e.lt || l < k)
        });
        if !redundant {
            minimal.push(e.clone());
        }
    }
    let mut out: Vec<Elem> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Elem> =
                minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, e)| e.clone()).collect();
            let e = &minimal[k];
            let mut tail = e.v.clone();
            tail.add_term(e.lt.clone(), -Rat::one());
            let mut v = reduce(&tail, &others, order);
            v.add_term(e.lt.clone(), Rat::one());
            Elem { v, lt: e.lt.clone() }
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&b.lt, &a.lt));
    out.into_iter().map(|e| e.v).collect()
}

fn elems(gb: &[VecP], order: &TermOrder) -> Vec<Elem> {
    gb.iter().filter(|v| !v.is_zero()).map(|v| Elem::new(v.clone(), order)).collect()
}

/// Normal form of `v` modulo a Gröbner basis.
pub fn gb_normal_form(gb: &[VecP], v: &VecP, order: &TermOrder) -> VecP {
    reduce(v, &elems(gb, order), order)
}

/// Normal forms of several vectors against the same basis.
pub fn gb_normal_forms(gb: &[VecP], vs: &[VecP], order: &TermOrder) -> Vec<VecP> {
    let e = elems(gb, order);
    crate::par::par_map(vs, |v| reduce(v, &e, order))
}

pub fn leading_terms(gb: &[VecP], order: &TermOrder) -> Vec<ModuleTerm> {
    gb.iter().filter_map(|v| v.leading(order).map(|(t, _)| t.clone())).collect()
}

/// True iff every generator of `b` reduces to zero modulo the Gröbner basis
/// of `a`, and vice versa.
pub fn same_module(a: &[VecP], b: &[VecP], order: &TermOrder) -> bool {
    let ga = groebner_basis(a, order);
    let gb = groebner_basis(b, order);
    b.iter().all(|v| gb_normal_form(&ga, v, order).is_zero())
        && a.iter().all(|v| gb_normal_form(&gb, v, order).is_zero())
}

/// Smallest `a` with `x_s^a e_k` a leading term, per component and variable.
fn pure_powers(lts: &[ModuleTerm], space: &FreeModule) -> Result<Vec<Vec<u32>>> {
    let mut out = vec![vec![u32::MAX; space.nvars]; space.rank];
    for t in lts {
        let e = t.term.exponents();
        let support: Vec<usize> = (0..space.nvars).filter(|&s| e[s] > 0).collect();
        match support.as_slice() {
            [] => out[t.component].iter_mut().for_each(|a| *a = 0),
            [s] => out[t.component][*s] = out[t.component][*s].min(e[*s]),
            _ => {}
        }
    }
    for (k, row) in out.iter().enumerate() {
        if let Some(s) = row.iter().position(|&a| a == u32::MAX) {
            return Err(Error::InfiniteCodimension { var: s, component: k });
        }
    }
    Ok(out)
}

/// Fails with the missing pure power if `P^r / <gb>` is infinite-dimensional.
pub fn check_finite_codimension(gb: &[VecP], space: &FreeModule) -> Result<()> {
    pure_powers(&leading_terms(gb, &space.order), space).map(|_| ())
}

/// The order module of terms outside the leading term module of `gb`.
/// Fails if the complement is infinite or has a term of degree above `bound`.
pub fn macaulay_complement(gb: &[VecP], space: &FreeModule, bound: u32) -> Result<OrderModule> {
    let lts = leading_terms(gb, &space.order);
    let powers = pure_powers(&lts, space)?;
    let mut terms = Vec::new();
    for (k, box_) in powers.iter().enumerate() {
        let mut cur = vec![0u32; space.nvars];
        if box_.contains(&0) {
            continue;
        }
        loop {
            let t = ModuleTerm::new(Term::new(cur.clone()), k);
            if !lts.iter().any(|l| l.divides(&t)) {
                if t.degree() > bound {
                    return Err(Error::DegreeCapExceeded { cap: bound });
                }
                terms.push(t);
            }
            // odometer over the box
            let mut s = 0;
            while s < space.nvars {
                cur[s] += 1;
                if cur[s] < box_[s] {
                    break;
                }
                cur[s] = 0;
                s += 1;
            }
            if s == space.nvars {
                break;
            }
        }
    }
    OrderModule::from_terms(space.nvars, space.rank, space.order, terms)
}

/// The border basis of `<gens>` over `O_σ(U)`, read off a Gröbner basis:
/// `G_j = b_j e_{β_j} - NF(b_j e_{β_j})`.
pub fn naive_border_basis(gens: &[VecP], space: &FreeModule, bound: u32) -> Result<BorderBasis> {
    for (i, g) in gens.iter().enumerate() {
        g.check_rank(space.rank)?;
        if g.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
    }
    if gens.is_empty() && space.rank > 0 {
        return Err(Error::EmptyGenerators);
    }
    let gb = groebner_basis(gens, &space.order);
    let om = macaulay_complement(&gb, space, bound)?;
    let border: Vec<VecP> = om
        .border_terms()
        .iter()
        .map(|b| VecP::monomial(space.rank, b.clone(), Rat::one()))
        .collect();
    let nfs = gb_normal_forms(&gb, &border, &space.order);
    let mut coeffs = RatMatrix::zeros(om.mu(), om.nu());
    for (j, nf) in nfs.iter().enumerate() {
        for (t, c) in nf.iter() {
            let i = om.position(t).expect("normal forms live in the complement");
            coeffs[(i, j)] = c.clone();
        }
    }
    Ok(BorderBasis::assume_verified(Prebasis::new(om, coeffs)?))
}

/// Generators of `Syz(f_1, ..., f_r)`, read off a Gröbner basis of the
/// vectors `(f_i, e_i)` under a position-first ordering.
pub fn syzygies(polys: &[Poly], base: BaseOrder) -> Result<Vec<VecP>> {
    let r = polys.len();
    let Some(nvars) = polys.first().map(Poly::nvars) else {
        return Ok(Vec::new());
    };
    let mut tagged = Vec::with_capacity(r);
    for (i, f) in polys.iter().enumerate() {
        if f.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
        if f.nvars() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, found: f.nvars() });
        }
        let mut v = VecP::from_components(nvars, std::slice::from_ref(f)).shift(1 + r, 0);
        v.add_term(ModuleTerm::unit(nvars, i + 1), Rat::one());
        tagged.push(v);
    }
    let order = TermOrder::new(base).with_extension(ModuleExtension::PosSigma);
    let gb = groebner_basis(&tagged, &order);
    Ok(gb
        .into_iter()
        .filter(|v| v.support().all(|t| t.component > 0))
        .map(|v| {
            VecP::from_terms(
                nvars,
                r,
                v.iter().map(|(t, c)| (ModuleTerm::new(t.term.clone(), t.component - 1), c.clone())),
            )
        })
        .collect())
}

/// Coefficient tuples `(q_1, ..., q_r)` with `Σ q_v f_v` generating
/// `<h> ∩ <f>`. Each syzygy `(p, q)` of `(h, f)` contributes `-q`.
pub fn ideal_intersection(h: &[Poly], f: &[Poly], base: BaseOrder) -> Result<Vec<Vec<Poly>>> {
    let all: Vec<Poly> = h.iter().chain(f).cloned().collect();
    let s = h.len();
    Ok(syzygies(&all, base)?
        .into_iter()
        .map(|v| v.components()[s..].iter().map(|q| -q).collect::<Vec<Poly>>())
        .filter(|q| q.iter().any(|p| !p.is_zero()))
        .collect())
}

/// `Σ q_v f_v`.
pub fn combine_polys(q: &[Poly], f: &[Poly]) -> Poly {
    let nvars = f.first().map_or(0, Poly::nvars);
    q.iter().zip(f).fold(Poly::zero(nvars), |acc, (a, b)| &acc + &(a * b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn mt(e: &[u32], k: usize) -> ModuleTerm {
        ModuleTerm::new(Term::new(e.to_vec()), k)
    }

    fn v(terms: &[(&[u32], usize, Rat)]) -> VecP {
        VecP::from_terms(2, 2, terms.iter().map(|(e, k, c)| (mt(e, *k), c.clone())))
    }

    fn p(terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(2, terms.iter().map(|(e, c)| (Term::new(e.to_vec()), int(*c))))
    }

    pub(crate) fn example_gens() -> Vec<VecP> {
        vec![
            v(&[(&[0, 0], 0, int(-2)), (&[1, 0], 1, int(3)), (&[0, 0], 1, int(-1))]),
            v(&[(&[1, 0], 0, int(3)), (&[0, 0], 0, int(4)), (&[0, 0], 1, int(2))]),
            v(&[(&[0, 1], 1, int(1)), (&[0, 0], 1, int(-1))]),
            v(&[(&[0, 1], 0, int(1)), (&[0, 0], 0, int(-1))]),
            v(&[
                (&[1, 0], 0, int(1)),
                (&[0, 1], 0, int(1)),
                (&[0, 0], 0, int(1)),
                (&[1, 0], 1, int(-1)),
                (&[0, 1], 1, int(1)),
            ]),
        ]
    }

    fn example_basis() -> Vec<VecP> {
        vec![
            v(&[(&[1, 0], 0, int(1)), (&[0, 0], 0, rat(4, 3)), (&[0, 0], 1, rat(2, 3))]),
            v(&[(&[1, 0], 1, int(1)), (&[0, 0], 0, rat(-2, 3)), (&[0, 0], 1, rat(-1, 3))]),
            v(&[(&[0, 1], 0, int(1)), (&[0, 0], 0, int(-1))]),
            v(&[(&[0, 1], 1, int(1)), (&[0, 0], 1, int(-1))]),
        ]
    }

    #[test]
    fn example_gb() {
        let o = TermOrder::default();
        let gb = groebner_basis(&example_gens(), &o);
        assert_eq!(gb, example_basis());
        assert_eq!(groebner_basis(&gb, &o), gb);
        let space = FreeModule::new(2, 2, o);
        let m = macaulay_complement(&gb, &space, 32).unwrap();
        assert_eq!(m.terms(), &[mt(&[0, 0], 0), mt(&[0, 0], 1)]);
    }

    #[test]
    fn naive_on_example() {
        let space = FreeModule::new(2, 2, TermOrder::default());
        let bb = naive_border_basis(&example_gens(), &space, 32).unwrap();
        let mut got = bb.generators().to_vec();
        let mut want = example_basis();
        got.sort_by_key(|x| x.to_string());
        want.sort_by_key(|x| x.to_string());
        assert_eq!(got, want);
        let units = vec![VecP::unit(2, 2, 0), VecP::unit(2, 2, 1)];
        let trivial = naive_border_basis(&units, &space, 32).unwrap();
        assert_eq!(trivial.mu(), 0);
        assert_eq!(trivial.generators(), units.as_slice());
    }

    #[test]
    fn normal_forms() {
        let o = TermOrder::default();
        let gb = groebner_basis(&example_gens(), &o);
        for g in example_gens() {
            assert!(gb_normal_form(&gb, &g, &o).is_zero());
        }
        let e = VecP::unit(2, 2, 0);
        assert_eq!(gb_normal_form(&gb, &e, &o), e);
    }

    #[test]
    fn infinite_complement() {
        let space = FreeModule::new(2, 1, TermOrder::default());
        let gb = vec![VecP::monomial(1, mt(&[2, 0], 0), int(1))];
        assert_eq!(
            macaulay_complement(&gb, &space, 32),
            Err(Error::InfiniteCodimension { var: 1, component: 0 })
        );
        let units = vec![VecP::unit(2, 1, 0)];
        assert_eq!(macaulay_complement(&units, &space, 32).unwrap().mu(), 0);
    }

    #[test]
    fn univariate_chain() {
        // U = <x^3 - x - 1> in Q[x]: border {x^3}, M = {1, x, x^2}
        let space = FreeModule::new(1, 1, TermOrder::default());
        let f = VecP::from_terms(
            1,
            1,
            [
                (ModuleTerm::new(Term::new(vec![3]), 0), int(1)),
                (ModuleTerm::new(Term::new(vec![1]), 0), int(-1)),
                (ModuleTerm::new(Term::new(vec![0]), 0), int(-1)),
            ],
        );
        let bb = naive_border_basis(std::slice::from_ref(&f), &space, 32).unwrap();
        assert_eq!(bb.mu(), 3);
        assert_eq!(bb.generators(), &[f]);
    }

    #[test]
    fn example_syzygies() {
        let f = vec![p(&[(&[1, 0], 1), (&[0, 1], -1)]), p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)])];
        let syz = syzygies(&f, BaseOrder::DegRevLex).unwrap();
        let expected = VecP::from_components(2, &[f[1].clone(), -&f[0]]);
        assert_eq!(syz, vec![expected]);
        assert!(syzygies(&f[..1], BaseOrder::DegRevLex).unwrap().is_empty());
        let twice = syzygies(&[f[0].clone(), f[0].clone()], BaseOrder::DegRevLex).unwrap();
        assert_eq!(twice, vec![v(&[(&[0, 0], 0, int(1)), (&[0, 0], 1, int(-1))])]);
    }

    #[test]
    fn intersection_members() {
        let h = vec![p(&[(&[2, 0], 1), (&[1, 1], 1)]), p(&[(&[0, 1], 1), (&[0, 0], -1)])];
        let f = vec![p(&[(&[1, 0], 1), (&[0, 1], -1)]), p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)])];
        let qs = ideal_intersection(&h, &f, BaseOrder::DegRevLex).unwrap();
        assert!(!qs.is_empty());
        let o = TermOrder::default();
        let as_vec = |ps: &[Poly]| -> Vec<VecP> {
            ps.iter().map(|q| VecP::from_components(2, std::slice::from_ref(q))).collect()
        };
        let gi = groebner_basis(&as_vec(&h), &o);
        let gj = groebner_basis(&as_vec(&f), &o);
        for q in &qs {
            let e = VecP::from_components(2, &[combine_polys(q, &f)]);
            assert!(gb_normal_form(&gi, &e, &o).is_zero());
            assert!(gb_normal_form(&gj, &e, &o).is_zero());
        }
    }
}
