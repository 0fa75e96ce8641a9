//! Border bases of quotient modules `U^S ⊆ P^r / S`, handled through
//! characterizing order modules and prebases in `P^r`.

use std::collections::HashSet;

use num_traits::One;

use crate::charsuite::{buchberger_check, PairMode, SvWitness};
use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::groebner::{gb_normal_form, gb_normal_forms, groebner_basis};
use crate::mbba::{module_border_basis, MbbaOptions};
use crate::ordstruct::OrderModule;
use crate::prebasis::{BorderBasis, Prebasis};
use crate::ring::{FreeModule, ModuleTerm, Rat, VecP};

/// A submodule `S ⊆ P^r` with a reduced Gröbner basis for canonical
/// residue representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientContext {
    space: FreeModule,
    syz_gens: Vec<VecP>,
    gb: Vec<VecP>,
}

impl QuotientContext {
    /// An empty generator list stands for `S = 0`.
    pub fn new(space: FreeModule, syz_gens: Vec<VecP>) -> Result<Self> {
        for (i, s) in syz_gens.iter().enumerate() {
            s.check_rank(space.rank)?;
            if s.is_zero() {
                return Err(Error::ZeroGenerator(i));
            }
        }
        let gb = groebner_basis(&syz_gens, &space.order);
        Ok(QuotientContext { space, syz_gens, gb })
    }

    pub fn space(&self) -> &FreeModule {
        &self.space
    }

    pub fn generators(&self) -> &[VecP] {
        &self.syz_gens
    }

    pub fn groebner_basis(&self) -> &[VecP] {
        &self.gb
    }

    /// The canonical representative of `v + S`.
    pub fn canonical(&self, v: &VecP) -> VecP {
        gb_normal_form(&self.gb, v, &self.space.order)
    }

    pub fn same_class(&self, a: &VecP, b: &VecP) -> bool {
        self.canonical(&(a - b)).is_zero()
    }

    fn canonical_terms(&self, ts: &[ModuleTerm]) -> Vec<VecP> {
        let vs: Vec<VecP> =
            ts.iter().map(|t| VecP::monomial(self.space.rank, t.clone(), Rat::one())).collect();
        gb_normal_forms(&self.gb, &vs, &self.space.order)
    }
}

/// `G_k^S = b_k e_{β_k} - Σ_i c_ik t_i e_{α_i} + S`, stored through chosen
/// term representatives of the classes in `M^S` and `∂M^S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotPrebasis {
    ctx: QuotientContext,
    terms: Vec<ModuleTerm>,
    border: Vec<ModuleTerm>,
    coeffs: RatMatrix,
}

impl QuotPrebasis {
    /// `coeffs` is `|terms| × |border|`.
    pub fn new(
        ctx: QuotientContext,
        terms: Vec<ModuleTerm>,
        border: Vec<ModuleTerm>,
        coeffs: RatMatrix,
    ) -> Result<Self> {
        if coeffs.rows() != terms.len() || coeffs.cols() != border.len() {
            return Err(Error::CoefficientShape {
                rows: coeffs.rows(),
                cols: coeffs.cols(),
                mu: terms.len(),
                nu: border.len(),
            });
        }
        for t in terms.iter().chain(&border) {
            if t.component >= ctx.space.rank {
                return Err(Error::ComponentOutOfRange {
                    component: t.component,
                    rank: ctx.space.rank,
                });
            }
        }
        Ok(QuotPrebasis { ctx, terms, border, coeffs })
    }

    /// Reads representatives `b - Σ c t` with `t` among `terms`; `b` is the
    /// one support term outside `terms` and must have coefficient 1.
    pub fn from_vectors(ctx: QuotientContext, terms: Vec<ModuleTerm>, vectors: &[VecP]) -> Result<Self> {
        let pos = |t: &ModuleTerm| terms.iter().position(|s| s == t);
        let mut border = Vec::with_capacity(vectors.len());
        let mut coeffs = RatMatrix::zeros(terms.len(), vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            v.check_rank(ctx.space.rank)?;
            let bad = |reason: String| Error::MalformedPrebasis { position: j, reason };
            let mut head = None;
            for (t, c) in v.iter() {
                match pos(t) {
                    Some(i) => coeffs[(i, j)] = -c,
                    None if head.is_some() => return Err(bad("more than one term outside M".into())),
                    None if !c.is_one() => {
                        return Err(bad(format!("border term {t} must have coefficient 1")))
                    }
                    None => head = Some(t.clone()),
                }
            }
            border.push(head.ok_or_else(|| bad("no border term".into()))?);
        }
        Self::new(ctx, terms, border, coeffs)
    }

    pub fn context(&self) -> &QuotientContext {
        &self.ctx
    }

    /// Representatives `t_i e_{α_i}` of `M^S`.
    pub fn terms(&self) -> &[ModuleTerm] {
        &self.terms
    }

    /// Representatives `b_k e_{β_k}` of `∂M^S`.
    pub fn border_terms(&self) -> &[ModuleTerm] {
        &self.border
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    /// `b_k e_{β_k} - Σ_i c_ik t_i e_{α_i}` with the stored representatives.
    pub fn representatives(&self) -> Vec<VecP> {
        let (nvars, rank) = (self.ctx.space.nvars, self.ctx.space.rank);
        self.border
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let mut g = VecP::monomial(rank, b.clone(), Rat::one());
                for (i, t) in self.terms.iter().enumerate() {
                    g.add_term(t.clone(), -&self.coeffs[(i, k)]);
                }
                debug_assert_eq!(g.nvars(), nvars);
                g
            })
            .collect()
    }

    /// Canonical representatives `NF_S(G_k)` of the classes `G_k^S`.
    pub fn canonical(&self) -> Vec<VecP> {
        gb_normal_forms(&self.ctx.gb, &self.representatives(), &self.ctx.space.order)
    }

    /// Canonical representatives of the classes in `M^S`.
    pub fn canonical_terms(&self) -> Vec<VecP> {
        self.ctx.canonical_terms(&self.terms)
    }
}

/// The characterizing prebasis of `qp`: the order module is the set of term
/// representatives of `M^S`, and each border term of it takes the
/// coefficients of the representative of its class in `∂M^S`.
pub fn build_characterizing_prebasis(qp: &QuotPrebasis) -> Result<Prebasis> {
    let ctx = &qp.ctx;
    let space = ctx.space;

    let classes = ctx.canonical_terms(&qp.terms);
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            if classes[a] == classes[b] {
                return Err(Error::NoCharacterizingOrderModule {
                    first: qp.terms[a].clone(),
                    second: qp.terms[b].clone(),
                });
            }
        }
    }
    let om = OrderModule::from_terms(space.nvars, space.rank, space.order, qp.terms.iter().cloned())?;

    let reps = ctx.canonical_terms(&qp.border);
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            if reps[a] == reps[b] {
                return Err(Error::DuplicateBorderClass {
                    first: qp.border[a].clone(),
                    second: qp.border[b].clone(),
                });
            }
        }
    }

    // qp.terms and om.terms() may list M in different orders
    let row_of: Vec<usize> = om
        .terms()
        .iter()
        .map(|t| qp.terms.iter().position(|s| s == t).expect("same set"))
        .collect();
    let border_classes = ctx.canonical_terms(om.border_terms());
    let mut used = HashSet::new();
    let mut coeffs = RatMatrix::zeros(om.mu(), om.nu());
    for (j, class) in border_classes.iter().enumerate() {
        let k = reps
            .iter()
            .position(|r| r == class)
            .ok_or_else(|| Error::UnmatchedBorderClass(om.border_terms()[j].clone()))?;
        used.insert(k);
        for (i, &src) in row_of.iter().enumerate() {
            coeffs[(i, j)] = qp.coeffs[(src, k)].clone();
        }
    }
    if let Some(k) = (0..reps.len()).find(|k| !used.contains(k)) {
        return Err(Error::UnmatchedBorderClass(qp.border[k].clone()));
    }
    Prebasis::new(om, coeffs)
}

/// Outcome of [`check_quotient_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientVerdict {
    Basis,
    /// The characterizing prebasis fails Buchberger's criterion.
    NotBorderBasis(SvWitness),
    /// A generator of `S` is not in `<G>`; `nr` is its normal remainder.
    SyzygyOutside { index: usize, nr: VecP },
}

/// `G^S` is a quotient border basis iff its characterizing prebasis `G` is a
/// border basis and `S ⊆ <G>`.
pub fn check_quotient_basis(qp: &QuotPrebasis) -> Result<QuotientVerdict> {
    let g = build_characterizing_prebasis(qp)?;
    if let Some(w) = buchberger_check(&g, PairMode::NeighborsOnly) {
        return Ok(QuotientVerdict::NotBorderBasis(w));
    }
    for (index, s) in qp.ctx.syz_gens.iter().enumerate() {
        let nr = g.normal_remainder(s)?;
        if !nr.is_zero() {
            return Ok(QuotientVerdict::SyzygyOutside { index, nr });
        }
    }
    Ok(QuotientVerdict::Basis)
}

/// Result of the quotient algorithm: `G^S` and the border basis of `U + S`
/// that characterizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub quotient: QuotPrebasis,
    pub underlying: BorderBasis,
}

/// Border basis of `U^S = (U + S)/S` for `U = <u_gens>` and `S = <s_gens>`.
pub fn quotient_border_basis(
    u_gens: &[VecP],
    s_gens: &[VecP],
    space: &FreeModule,
    opts: &MbbaOptions,
) -> Result<QuotientBasis> {
    let ctx = QuotientContext::new(*space, s_gens.to_vec())?;
    for (i, u) in u_gens.iter().enumerate() {
        if u.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
    }
    let all: Vec<VecP> = u_gens.iter().chain(s_gens).cloned().collect();
    let underlying = module_border_basis(&all, space, opts)?;
    let om = underlying.order_module();

    // one representative per class of ∂M modulo S, first in canonical order
    let classes = ctx.canonical_terms(om.border_terms());
    let mut keep: Vec<usize> = Vec::new();
    for (j, c) in classes.iter().enumerate() {
        if !keep.iter().any(|&k| classes[k] == *c) {
            keep.push(j);
        }
    }
    let mut coeffs = RatMatrix::zeros(om.mu(), keep.len());
    for (col, &j) in keep.iter().enumerate() {
        for i in 0..om.mu() {
            coeffs[(i, col)] = underlying.coeffs()[(i, j)].clone();
        }
    }
    let border = keep.iter().map(|&j| om.border_terms()[j].clone()).collect();
    let quotient = QuotPrebasis::new(ctx, om.terms().to_vec(), border, coeffs)?;
    Ok(QuotientBasis { quotient, underlying })
}

impl QuotientBasis {
    /// Normal remainder of a representative, against the characterizing basis.
    /// The result depends on the representative, not only on its class.
    pub fn normal_remainder(&self, v: &VecP) -> Result<VecP> {
        self.underlying.normal_form(v)
    }
}
