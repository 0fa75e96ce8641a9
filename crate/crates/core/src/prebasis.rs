//! Module border prebases and the border division algorithm.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::ordstruct::OrderModule;
use crate::ring::{ModuleTerm, Poly, Rat, Term, TermOrder, VecP};

/// `G_j = b_j e_{β_j} - Σ_i c_ij t_i e_{α_i}` for `j = 1..ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prebasis {
    om: OrderModule,
    coeffs: RatMatrix,
    gens: Vec<VecP>,
}

impl Prebasis {
    /// `coeffs` is `μ × ν`; column `j` holds `c_1j..c_μj`.
    pub fn new(om: OrderModule, coeffs: RatMatrix) -> Result<Self> {
        let (mu, nu) = (om.mu(), om.nu());
        if coeffs.rows() != mu || coeffs.cols() != nu {
            return Err(Error::CoefficientShape {
                rows: coeffs.rows(),
                cols: coeffs.cols(),
                mu,
                nu,
            });
        }
        let (nvars, rank) = (om.nvars(), om.rank());
        let gens = om
            .border_terms()
            .iter()
            .enumerate()
            .map(|(j, b)| {
                let mut g = VecP::monomial(rank, b.clone(), Rat::from_integer(1.into()));
                for (i, t) in om.terms().iter().enumerate() {
                    g.add_term(t.clone(), -&coeffs[(i, j)]);
                }
                debug_assert_eq!(g.nvars(), nvars);
                g
            })
            .collect();
        Ok(Prebasis { om, coeffs, gens })
    }

    /// Reads the coefficients off vectors of the form `b - Σ c t`, one per
    /// border term, given in any order.
    pub fn from_vectors(om: OrderModule, vectors: &[VecP]) -> Result<Self> {
        let (mu, nu) = (om.mu(), om.nu());
        let mut coeffs = RatMatrix::zeros(mu, nu);
        let mut seen: Vec<Option<usize>> = vec![None; nu];
        for (pos, v) in vectors.iter().enumerate() {
            let bad = |reason: String| Error::MalformedPrebasis { position: pos, reason };
            v.check_rank(om.rank())?;
            let mut head = None;
            for (t, c) in v.iter() {
                if om.contains(t) {
                    continue;
                }
                let j = om
                    .border_position(t)
                    .ok_or_else(|| bad(format!("term {t} is neither in M nor in its border")))?;
                if head.is_some() {
                    return Err(bad("more than one border term".into()));
                }
                if *c != Rat::from_integer(1.into()) {
                    return Err(bad(format!("border term {t} must have coefficient 1")));
                }
                head = Some(j);
            }
            let j = head.ok_or_else(|| bad("no border term".into()))?;
            if let Some(prev) = seen[j] {
                return Err(bad(format!(
                    "border term {} already used by vector {}",
                    om.border_terms()[j],
                    prev + 1
                )));
            }
            seen[j] = Some(pos);
            for (t, c) in v.iter() {
                if let Some(i) = om.position(t) {
                    coeffs[(i, j)] = -c;
                }
            }
        }
        if let Some(j) = seen.iter().position(Option::is_none) {
            return Err(Error::MalformedPrebasis {
                position: vectors.len(),
                reason: format!("no vector for border term {}", om.border_terms()[j]),
            });
        }
        Self::new(om, coeffs)
    }

    pub fn order_module(&self) -> &OrderModule {
        &self.om
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    pub fn generators(&self) -> &[VecP] {
        &self.gens
    }

    pub fn generator(&self, j: usize) -> Result<&VecP> {
        self.gens.get(j).ok_or(Error::IndexOutOfRange { index: j, len: self.gens.len() })
    }

    pub fn mu(&self) -> usize {
        self.om.mu()
    }

    pub fn nu(&self) -> usize {
        self.om.nu()
    }

    pub fn nvars(&self) -> usize {
        self.om.nvars()
    }

    pub fn rank(&self) -> usize {
        self.om.rank()
    }

    pub fn order(&self) -> &TermOrder {
        self.om.order()
    }

    /// Coordinates of `v ∈ <M>_K` in the basis `t_1 e_{α_1}, ...`.
    pub fn coords(&self, v: &VecP) -> Result<Vec<Rat>> {
        v.check_rank(self.rank())?;
        let mut out = vec![Rat::zero(); self.mu()];
        for (t, c) in v.iter() {
            let i = self.om.position(t).ok_or_else(|| Error::UnsupportedTerm(t.clone()))?;
            out[i] = c.clone();
        }
        Ok(out)
    }

    /// `Σ c_i t_i e_{α_i}`.
    pub fn from_coords(&self, coords: &[Rat]) -> VecP {
        VecP::from_terms(
            self.nvars(),
            self.rank(),
            self.om.terms().iter().cloned().zip(coords.iter().cloned()),
        )
    }

    /// Border division with the default choice: among the support terms of
    /// maximal index the largest one is reduced first.
    pub fn divide(&self, v: &VecP) -> Result<DivisionResult> {
        let order = *self.order();
        self.divide_with(v, |cands: &[ModuleTerm]| {
            (0..cands.len()).max_by(|&a, &b| order.cmp(&cands[a], &cands[b])).unwrap_or(0)
        })
    }

    /// Border division where `choose` picks which of the maximal-index support
    /// terms (given in canonical support order) to reduce next.
    pub fn divide_with(
        &self,
        v: &VecP,
        mut choose: impl FnMut(&[ModuleTerm]) -> usize,
    ) -> Result<DivisionResult> {
        v.check_rank(self.rank())?;
        let nvars = self.nvars();
        let mut quotients = vec![Poly::zero(nvars); self.nu()];
        let mut q = v.clone();
        loop {
            let mut best = 0;
            let mut cands: Vec<ModuleTerm> = Vec::new();
            for t in q.support() {
                let i = self.om.index(t)?;
                if i > best {
                    best = i;
                    cands.clear();
                }
                if i == best && i > 0 {
                    cands.push(t.clone());
                }
            }
            if best == 0 {
                break;
            }
            let pick = choose(&cands);
            let t = &cands[pick.min(cands.len() - 1)];
            let (shift, j) = self.om.factor_through_border(t)?;
            let a = q.coeff(t);
            quotients[j].add_term(shift.clone(), a.clone());
            q.add_scaled(&-a, &shift, &self.gens[j]);
        }
        let remainder = self.coords(&q)?;
        Ok(DivisionResult { quotients, remainder })
    }

    /// `NR_G(v)`, the part of `v` left in `<M>_K` by the division algorithm.
    pub fn normal_remainder(&self, v: &VecP) -> Result<VecP> {
        Ok(self.from_coords(&self.divide(v)?.remainder))
    }

    /// One rewrite step `v -> v - c t' G_j` at the support term `t = t' b_j e_{β_j}`.
    pub fn rewrite_step(&self, v: &VecP, t: &ModuleTerm, j: usize) -> Result<VecP> {
        v.check_rank(self.rank())?;
        let g = self.generator(j)?;
        let b = &self.om.border_terms()[j];
        if !v.contains(t) {
            return Err(Error::NotInSupport(t.clone()));
        }
        if !b.divides(t) {
            return Err(Error::NotBorderMultiple { term: t.clone(), border: b.clone() });
        }
        let shift = t.term.quot(&b.term)?;
        let mut out = v.clone();
        out.add_scaled(&-v.coeff(t), &shift, g);
        Ok(out)
    }

    /// `Σ p_j G_j`.
    pub fn combine(&self, polys: &[Poly]) -> VecP {
        let mut out = VecP::zero(self.nvars(), self.rank());
        for (p, g) in polys.iter().zip(&self.gens) {
            for (t, c) in p.iter() {
                out.add_scaled(c, t, g);
            }
        }
        out
    }
}

/// Output of the border division algorithm:
/// `v = Σ p_j G_j + Σ c_i t_i e_{α_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Poly>,
    pub remainder: Vec<Rat>,
}

/// A prebasis known to be a border basis of the module it generates.
/// Obtained from [`crate::charsuite::verify`] or the basis algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderBasis(Prebasis);

impl BorderBasis {
    pub(crate) fn assume_verified(p: Prebasis) -> Self {
        BorderBasis(p)
    }

    pub fn prebasis(&self) -> &Prebasis {
        &self.0
    }

    pub fn into_prebasis(self) -> Prebasis {
        self.0
    }

    pub fn order_module(&self) -> &OrderModule {
        self.0.order_module()
    }

    /// The unique representative of `v + <G>` supported in `M`.
    pub fn normal_form(&self, v: &VecP) -> Result<VecP> {
        self.0.normal_remainder(v)
    }

    /// Generators indexed by the corners of `M`.
    pub fn corner_subset(&self) -> Vec<VecP> {
        let om = self.order_module();
        om.corners()
            .iter()
            .map(|c| self.0.gens[om.border_position(c).expect("corners lie on the border")].clone())
            .collect()
    }
}

impl std::ops::Deref for BorderBasis {
    type Target = Prebasis;
    fn deref(&self) -> &Prebasis {
        &self.0
    }
}

/// Helper for tests and examples: the vector `c * t e_k`.
pub fn term_vec(rank: usize, t: Term, k: usize, c: Rat) -> VecP {
    VecP::monomial(rank, ModuleTerm::new(t, k), c)
}
