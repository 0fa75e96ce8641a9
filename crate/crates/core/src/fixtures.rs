//! Worked examples over `Q[x,y]^2` with DegRevLex and position as tie-break,
//! shared by the acceptance suite, the benches and `modbb selftest`.

use crate::input::{parse_poly, parse_vector, SessionHeader};
use crate::ordstruct::OrderModule;
use crate::prebasis::Prebasis;
use crate::ring::{FreeModule, ModuleTerm, Poly, Term, TermOrder, VecP};

pub fn header(rank: usize) -> SessionHeader {
    SessionHeader::new(vec!["x".into(), "y".into()], rank, TermOrder::default()).expect("valid header")
}

pub fn space() -> FreeModule {
    header(2).space()
}

pub fn vecs(rank: usize, srcs: &[&str]) -> Vec<VecP> {
    let h = header(rank);
    srcs.iter().map(|s| parse_vector(s, &h).expect("valid fixture")).collect()
}

pub fn polys(srcs: &[&str]) -> Vec<Poly> {
    let h = header(1);
    srcs.iter().map(|s| parse_poly(s, &h).expect("valid fixture")).collect()
}

pub fn module_term(e: [u32; 2], k: usize) -> ModuleTerm {
    ModuleTerm::new(Term::new(e.to_vec()), k)
}

/// `{x, y, 1} e1 ∪ {x^2, x, 1} e2`.
pub fn order_module() -> OrderModule {
    let t = |a, b| Term::new(vec![a, b]);
    OrderModule::from_ideals(
        2,
        TermOrder::default(),
        vec![vec![t(1, 0), t(0, 1), t(0, 0)], vec![t(2, 0), t(1, 0), t(0, 0)]],
    )
    .expect("divisor closed")
}

/// A seven-element prebasis over [`order_module`] that is not a border basis.
pub fn prebasis() -> Prebasis {
    let gens = vecs(
        2,
        &[
            "x^2*e1 - y*e1 + e2",
            "x*y*e1 - e2",
            "y^2*e1 - x*e2",
            "x^3*e2 - e1",
            "x^2*y*e2 - e1 - e2",
            "x*y*e2 + 3*e1",
            "y*e2 - x*e1 - y*e1 - e1 - e2",
        ],
    );
    Prebasis::from_vectors(order_module(), &gens).expect("well-formed prebasis")
}

/// The vector divided by [`prebasis`] in the division example.
pub fn division_input() -> VecP {
    vecs(2, &["x^3*e1 + x*y*e1 + x^3*y*e2"]).remove(0)
}

/// Generators `B_1..B_4` of `U` in the quotient example.
pub fn u_generators() -> Vec<VecP> {
    vecs(2, &["(-2)*e1 + (3*x - 1)*e2", "(3*x + 4)*e1 + 2*e2", "(y - 1)*e2", "(y - 1)*e1"])
}

/// The generator of `S = Syz(x - y, x + y + 1)`.
pub fn s_generator() -> VecP {
    vecs(2, &["(x + y + 1)*e1 + (-x + y)*e2"]).remove(0)
}

/// `B_1..B_4` together with the generator of `S`.
pub fn mbba_generators() -> Vec<VecP> {
    let mut g = u_generators();
    g.push(s_generator());
    g
}

/// The border basis of `<mbba_generators()>` over `{e1, e2}`.
pub fn mbba_basis() -> Vec<VecP> {
    vecs(
        2,
        &["x*e1 + 4/3*e1 + 2/3*e2", "x*e2 - 2/3*e1 - 1/3*e2", "y*e1 - e1", "y*e2 - e2"],
    )
}

/// `f_1 = x - y`, `f_2 = x + y + 1`.
pub fn subideal_f() -> Vec<Poly> {
    polys(&["x - y", "x + y + 1"])
}

/// Generators of `I = <x^2 + xy, y - 1>`.
pub fn subideal_h() -> Vec<Poly> {
    polys(&["x^2 + x*y", "y - 1"])
}

/// `S = <x e1 - y e2>`.
pub fn collapsing_s() -> VecP {
    vecs(2, &["x*e1 - y*e2"]).remove(0)
}

/// Representatives `{x^2, x, 1} e1 ∪ {y^2, y, 1} e2`, on which `x e1 ≡ y e2`
/// modulo [`collapsing_s`].
pub fn colliding_terms() -> Vec<ModuleTerm> {
    vec![
        module_term([2, 0], 0),
        module_term([1, 0], 0),
        module_term([0, 0], 0),
        module_term([0, 2], 1),
        module_term([0, 1], 1),
        module_term([0, 0], 1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_agree_with_hand_built_data() {
        assert_eq!(prebasis(), crate::prebasis::tests::seven());
        assert_eq!(mbba_basis().len(), 4);
        assert_eq!(u_generators()[0].len(), 3);
    }
}
