//! Characterizations of border bases: multiplication matrices, SV-vectors,
//! neighbors, Buchberger's criterion, border forms and liftings.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::ordstruct::OrderModule;
use crate::par::{par_find_map_first, par_map};
use crate::prebasis::{BorderBasis, Prebasis};
use crate::ring::{Poly, Rat, Term, VecP};

/// The formal multiplication matrices `X_1..X_n`, each `μ × μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultMatrices {
    pub mats: Vec<RatMatrix>,
}

/// Column `l` of `X_s` is `e_i` if `x_s t_l e_{α_l} = t_i e_{α_i}` and the
/// coefficient column `c_{·j}` if `x_s t_l e_{α_l} = b_j e_{β_j}`.
pub fn mult_matrices(g: &Prebasis) -> MultMatrices {
    let om = g.order_module();
    let mu = om.mu();
    let mats = (0..om.nvars())
        .map(|s| {
            let mut m = RatMatrix::zeros(mu, mu);
            for (l, t) in om.terms().iter().enumerate() {
                let u = t.mul_var(s);
                if let Some(i) = om.position(&u) {
                    m[(i, l)] = Rat::from_integer(1.into());
                } else {
                    let j = om.border_position(&u).expect("x_s M lies in M ∪ ∂M");
                    for i in 0..mu {
                        m[(i, l)] = g.coeffs()[(i, j)].clone();
                    }
                }
            }
            m
        })
        .collect();
    MultMatrices { mats }
}

impl MultMatrices {
    /// First pair `s < u` with `X_s X_u ≠ X_u X_s`, if any.
    pub fn commuting_witness(&self) -> Option<(usize, usize)> {
        let n = self.mats.len();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|s| (s + 1..n).map(move |u| (s, u))).collect();
        par_find_map_first(&pairs, |&(s, u)| {
            let (a, b) = (&self.mats[s], &self.mats[u]);
            ((a * b) != (b * a)).then_some((s, u))
        })
    }

    pub fn commute(&self) -> bool {
        self.commuting_witness().is_none()
    }

    /// Coordinates of `p ∘ v`, i.e. `p(X_1, ..., X_n) c` for `v` with
    /// coordinates `c`. Requires pairwise commuting matrices.
    pub fn module_action(&self, p: &Poly, coords: &[Rat]) -> Result<Vec<Rat>> {
        if let Some((s, u)) = self.commuting_witness() {
            return Err(Error::NonCommuting { s, u });
        }
        let mu = coords.len();
        if self.mats.first().is_some_and(|m| m.cols() != mu) {
            return Err(Error::DimensionMismatch { expected: self.mats[0].cols(), found: mu });
        }
        if p.nvars() != self.mats.len() {
            return Err(Error::DimensionMismatch { expected: self.mats.len(), found: p.nvars() });
        }
        let mut out = vec![Rat::zero(); mu];
        for (t, c) in p.iter() {
            let mut w = coords.to_vec();
            for (s, &e) in t.exponents().iter().enumerate() {
                for _ in 0..e {
                    w = self.mats[s].mul_vec(&w);
                }
            }
            for (o, x) in out.iter_mut().zip(w) {
                *o += c * x;
            }
        }
        Ok(out)
    }
}

/// `lcm(b_i, b_j)/b_i · G_i - lcm(b_i, b_j)/b_j · G_j`. Border terms in
/// different components have no common multiple and give the zero vector.
pub fn sv_vector(g: &Prebasis, i: usize, j: usize) -> Result<VecP> {
    let (gi, gj) = (g.generator(i)?, g.generator(j)?);
    let border = g.order_module().border_terms();
    let (bi, bj) = (&border[i], &border[j]);
    if bi.component != bj.component {
        return Ok(VecP::zero(g.nvars(), g.rank()));
    }
    let l = bi.term.lcm(&bj.term);
    let mut sv = gi.mul_term(&l.quot(&bi.term)?);
    sv.add_scaled(&-Rat::from_integer(1.into()), &l.quot(&bj.term)?, gj);
    Ok(sv)
}

/// How two border terms in the same component are related.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborKind {
    /// One term is `x_s` times the other.
    NextDoor(usize),
    /// `x_s b_i = x_u b_j` with `s ≠ u`.
    AcrossStreet(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborPair {
    pub i: usize,
    pub j: usize,
    pub kind: NeighborKind,
}

fn single_var(t: &Term) -> Option<usize> {
    let e = t.exponents();
    (t.degree() == 1).then(|| e.iter().position(|&a| a == 1).expect("degree one"))
}

/// All neighbor pairs `i < j`, in lexicographic order.
pub fn neighbors(om: &OrderModule) -> Vec<NeighborPair> {
    let border = om.border_terms();
    let mut out = Vec::new();
    for i in 0..border.len() {
        for j in i + 1..border.len() {
            let (bi, bj) = (&border[i], &border[j]);
            if bi.component != bj.component {
                continue;
            }
            let l = bi.term.lcm(&bj.term);
            let si = l.quot(&bi.term).expect("lcm is a multiple");
            let sj = l.quot(&bj.term).expect("lcm is a multiple");
            let kind = match (si.is_one(), sj.is_one(), single_var(&si), single_var(&sj)) {
                (true, _, _, Some(s)) | (_, true, Some(s), _) => NeighborKind::NextDoor(s),
                (_, _, Some(s), Some(u)) => NeighborKind::AcrossStreet(s, u),
                _ => continue,
            };
            out.push(NeighborPair { i, j, kind });
        }
    }
    out
}

/// Which SV-vectors Buchberger's criterion inspects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    /// Every pair `i < j` with `β_i = β_j`.
    AllPairs,
    /// Neighbor pairs only.
    NeighborsOnly,
}

/// A pair whose SV-vector has a nonzero normal remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvWitness {
    pub i: usize,
    pub j: usize,
    pub nr: VecP,
}

/// The pairs inspected under `mode`, in lexicographic order.
pub fn criterion_pairs(om: &OrderModule, mode: PairMode) -> Vec<(usize, usize)> {
    match mode {
        PairMode::NeighborsOnly => neighbors(om).into_iter().map(|p| (p.i, p.j)).collect(),
        PairMode::AllPairs => {
            let border = om.border_terms();
            let nu = border.len();
            (0..nu)
                .flat_map(|i| (i + 1..nu).map(move |j| (i, j)))
                .filter(|&(i, j)| border[i].component == border[j].component)
                .collect()
        }
    }
}

/// Buchberger's criterion. Returns the first failing pair in lexicographic
/// order, or `None` if every inspected SV-vector reduces to zero.
pub fn buchberger_check(g: &Prebasis, mode: PairMode) -> Option<SvWitness> {
    let pairs = criterion_pairs(g.order_module(), mode);
    par_find_map_first(&pairs, |&(i, j)| {
        let sv = sv_vector(g, i, j).expect("pair indices are in range");
        let nr = g.normal_remainder(&sv).expect("rank matches");
        (!nr.is_zero()).then_some(SvWitness { i, j, nr })
    })
}

/// Normal remainders of all SV-vectors inspected under `mode`.
pub fn sv_remainders(g: &Prebasis, mode: PairMode) -> Vec<((usize, usize), VecP)> {
    let pairs = criterion_pairs(g.order_module(), mode);
    let nrs = par_map(&pairs, |&(i, j)| {
        g.normal_remainder(&sv_vector(g, i, j).expect("pair indices are in range"))
            .expect("rank matches")
    });
    pairs.into_iter().zip(nrs).collect()
}

/// Checks that `g` is a border basis of the module it generates.
pub fn verify(g: Prebasis) -> Result<BorderBasis> {
    match buchberger_check(&g, PairMode::NeighborsOnly) {
        None => Ok(BorderBasis::assume_verified(g)),
        Some(SvWitness { i, j, nr }) => Err(Error::NotABorderBasis { i, j, nr }),
    }
}

/// Sum of the support monomials of maximal `M`-index.
pub fn border_form(om: &OrderModule, v: &VecP) -> Result<VecP> {
    let top = om.index_vec(v)?;
    let mut out = VecP::zero(v.nvars(), v.rank());
    for (t, c) in v.iter() {
        if om.index(t)? == top {
            out.add_term(t.clone(), c.clone());
        }
    }
    Ok(out)
}

/// The border syzygy `σ_ij = lcm/b_i · ε_i - lcm/b_j · ε_j` of the border
/// term tuple, as `ν` polynomials.
pub fn border_syzygy(om: &OrderModule, i: usize, j: usize) -> Result<Vec<Poly>> {
    let border = om.border_terms();
    let nu = border.len();
    if i >= nu || j >= nu {
        return Err(Error::IndexOutOfRange { index: i.max(j), len: nu });
    }
    let mut out = vec![Poly::zero(om.nvars()); nu];
    let (bi, bj) = (&border[i], &border[j]);
    if bi.component != bj.component || i == j {
        return Ok(out);
    }
    let l = bi.term.lcm(&bj.term);
    let one = Rat::from_integer(1.into());
    out[i] = Poly::monomial(l.quot(&bi.term)?, one.clone());
    out[j] = Poly::monomial(l.quot(&bj.term)?, -one);
    Ok(out)
}

/// The lifting `σ_ij - (p_1, ..., p_ν)` of a border syzygy, where the `p_k`
/// are the division quotients of `SV(G_i, G_j)`. Fails if the normal
/// remainder of the SV-vector is nonzero.
pub fn lift_neighbor_syzygy(g: &Prebasis, pair: &NeighborPair) -> Result<Vec<Poly>> {
    lift_border_syzygy(g, pair.i, pair.j)
}

pub fn lift_border_syzygy(g: &Prebasis, i: usize, j: usize) -> Result<Vec<Poly>> {
    let sigma = border_syzygy(g.order_module(), i, j)?;
    let sv = sv_vector(g, i, j)?;
    let div = g.divide(&sv)?;
    if div.remainder.iter().any(|c| !c.is_zero()) {
        return Err(Error::NoLifting { i, j, nr: g.from_coords(&div.remainder) });
    }
    Ok(sigma.iter().zip(&div.quotients).map(|(s, p)| s - p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prebasis::tests::{mt, seven};
    use crate::ring::{int, TermOrder};

    fn rows(v: &[[i64; 6]]) -> RatMatrix {
        RatMatrix::from_rows(v.iter().map(|r| r.iter().map(|&a| int(a)).collect()).collect())
    }

    #[test]
    fn example_matrices() {
        let mm = mult_matrices(&seven());
        let x = rows(&[
            [0, 0, 1, 0, 0, 0],
            [1, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [-1, 1, 0, 0, 0, 0],
        ]);
        let y = rows(&[
            [0, 0, 0, 0, 0, 1],
            [0, 0, 1, 0, 0, 1],
            [0, 0, 0, 1, -3, 1],
            [0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [1, 0, 0, 1, 0, 1],
        ]);
        assert_eq!(mm.mats, vec![x.clone(), y.clone()]);
        assert_eq!(mm.commuting_witness(), Some((0, 1)));
        assert_eq!((&x * &y).row(0), &[0, 0, 0, 1, -3, 1].map(int));
        assert_eq!((&y * &x).row(0), &[-1, 1, 0, 0, 0, 0].map(int));
        assert!(matches!(
            mm.module_action(&Poly::one(2), &vec![int(1); 6]),
            Err(Error::NonCommuting { s: 0, u: 1 })
        ));
    }

    #[test]
    fn example_neighbors() {
        let n = neighbors(seven().order_module());
        let got: Vec<(usize, usize, NeighborKind)> = n.iter().map(|p| (p.i, p.j, p.kind)).collect();
        // border: x^2e1, xye1, y^2e1, x^3e2, x^2ye2, xye2, ye2
        assert_eq!(
            got,
            vec![
                (0, 1, NeighborKind::AcrossStreet(1, 0)),
                (1, 2, NeighborKind::AcrossStreet(1, 0)),
                (3, 4, NeighborKind::AcrossStreet(1, 0)),
                (4, 5, NeighborKind::NextDoor(0)),
                (5, 6, NeighborKind::NextDoor(0)),
            ]
        );
    }

    #[test]
    fn example_witness() {
        let g = seven();
        for mode in [PairMode::AllPairs, PairMode::NeighborsOnly] {
            let w = buchberger_check(&g, mode).unwrap();
            assert_eq!((w.i, w.j), (0, 1));
            assert_eq!(w.nr.to_string(), "x*e1 + y*e1 + e1 + e2");
        }
        let err = verify(g).unwrap_err();
        assert_eq!(
            err.to_string(),
            "NOT a border basis; witness SV(G1,G2), NR = x*e1 + y*e1 + e1 + e2"
        );
    }

    #[test]
    fn sv_identities() {
        let g = seven();
        assert!(sv_vector(&g, 2, 2).unwrap().is_zero());
        let gens = g.generators();
        let y = Term::new(vec![0, 1]);
        let x = Term::new(vec![1, 0]);
        assert_eq!(sv_vector(&g, 0, 1).unwrap(), &gens[0].mul_term(&y) - &gens[1].mul_term(&x));
        // next door: x * (xy e2) = x^2y e2
        assert_eq!(sv_vector(&g, 5, 4).unwrap(), &gens[5].mul_term(&x) - &gens[4]);
    }

    #[test]
    fn border_forms() {
        let g = seven();
        let om = g.order_module();
        let v = VecP::from_terms(2, 2, [(mt(&[1, 0], 0), int(1)), (mt(&[2, 2], 1), int(1))]);
        assert_eq!(border_form(om, &v).unwrap(), VecP::monomial(2, mt(&[2, 2], 1), int(1)));
        for (j, gj) in g.generators().iter().enumerate() {
            let b = VecP::monomial(2, om.border_terms()[j].clone(), int(1));
            assert_eq!(border_form(om, gj).unwrap(), b);
        }
    }

    #[test]
    fn lifting_fails_on_nonbasis() {
        let g = seven();
        let pair = neighbors(g.order_module())[0];
        assert!(matches!(lift_neighbor_syzygy(&g, &pair), Err(Error::NoLifting { .. })));
    }

    #[test]
    fn trivial_prebases() {
        // M = {1}: the prebasis {x - 2, y - 3} is a basis
        let om = OrderModule::from_ideals(2, TermOrder::default(), vec![vec![Term::one(2)]]).unwrap();
        let c = RatMatrix::from_rows(vec![vec![int(2), int(3)]]);
        let g = Prebasis::new(om, c).unwrap();
        let mm = mult_matrices(&g);
        assert_eq!(mm.mats[0][(0, 0)], int(2));
        assert!(mm.commute());
        assert!(buchberger_check(&g, PairMode::AllPairs).is_none());
        let n = neighbors(g.order_module());
        assert_eq!(n, vec![NeighborPair { i: 0, j: 1, kind: NeighborKind::AcrossStreet(1, 0) }]);
        let lift = lift_neighbor_syzygy(&g, &n[0]).unwrap();
        assert!(g.combine(&lift).is_zero());
        let act = mm.module_action(&(&Poly::var(2, 0) * &Poly::var(2, 1)), &[int(1)]).unwrap();
        assert_eq!(act, vec![int(6)]);
    }
}
