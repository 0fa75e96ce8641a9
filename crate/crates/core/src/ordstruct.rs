//! Order ideals, order modules, borders, indices and corners.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ring::{terms_of_degree, ModuleTerm, Term, TermOrder, VecP};

/// A finite set of terms closed under forming divisors. May be empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderIdeal {
    nvars: usize,
    terms: BTreeSet<Term>,
}

impl OrderIdeal {
    /// Validates divisor closure. The witness is a missing divisor `t / x_s`.
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let terms: BTreeSet<Term> = terms.into_iter().collect();
        for t in &terms {
            if t.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: t.nvars() });
            }
            for s in 0..nvars {
                if let Some(d) = t.div_var(s) {
                    if !terms.contains(&d) {
                        return Err(Error::NotDivisorClosed { witness: d });
                    }
                }
            }
        }
        Ok(OrderIdeal { nvars, terms })
    }

    pub fn empty(nvars: usize) -> Self {
        OrderIdeal { nvars, terms: BTreeSet::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.terms.contains(t)
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(Term::degree).max()
    }

    /// The unique `i` with `t` in the `i`-th border (`0` inside the ideal).
    pub fn index(&self, t: &Term) -> u32 {
        if self.terms.is_empty() {
            return t.degree() + 1;
        }
        let d = t.degree();
        self.terms
            .iter()
            .filter(|o| o.divides(t))
            .map(|o| d - o.degree())
            .min()
            .expect("1 lies in every nonempty order ideal")
    }

    /// `∂^k O` for `k ≥ 1`, as a set. `k = 0` returns the ideal itself.
    pub fn border(&self, k: u32) -> BTreeSet<Term> {
        if k == 0 {
            return self.terms.clone();
        }
        if self.terms.is_empty() {
            return terms_of_degree(self.nvars, k - 1).into_iter().collect();
        }
        let shifts = terms_of_degree(self.nvars, k);
        let mut out = BTreeSet::new();
        for o in &self.terms {
            for s in &shifts {
                let t = o.mul(s);
                if !out.contains(&t) && self.index(&t) == k {
                    out.insert(t);
                }
            }
        }
        out
    }

    /// `∂^0 O ∪ ... ∪ ∂^k O`.
    pub fn border_closure(&self, k: u32) -> BTreeSet<Term> {
        (0..=k).flat_map(|i| self.border(i)).collect()
    }

    /// Border terms all of whose divisors `t / x_s` lie in the ideal.
    pub fn corners(&self) -> BTreeSet<Term> {
        self.border(1)
            .into_iter()
            .filter(|b| (0..self.nvars).all(|s| b.div_var(s).is_none_or(|d| self.contains(&d))))
            .collect()
    }
}

/// `M = O_1 e_1 ∪ ... ∪ O_r e_r` with canonical enumerations of `M` and `∂M`.
///
/// Both enumerations run through the components in ascending order and list
/// each component's terms in descending order under the session ordering.
#[derive(Clone, Debug)]
pub struct OrderModule {
    nvars: usize,
    order: TermOrder,
    ideals: Vec<OrderIdeal>,
    terms: Vec<ModuleTerm>,
    border: Vec<ModuleTerm>,
    term_pos: HashMap<ModuleTerm, usize>,
    border_pos: HashMap<ModuleTerm, usize>,
}

impl PartialEq for OrderModule {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.order == other.order && self.ideals == other.ideals
    }
}

impl Eq for OrderModule {}

impl OrderModule {
    pub fn new(nvars: usize, order: TermOrder, ideals: Vec<OrderIdeal>) -> Result<Self> {
        for o in &ideals {
            if o.nvars != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: o.nvars });
            }
        }
        let enumerate = |sets: Vec<BTreeSet<Term>>| -> Vec<ModuleTerm> {
            let mut out = Vec::new();
            for (k, set) in sets.into_iter().enumerate() {
                let mut ts: Vec<Term> = set.into_iter().collect();
                ts.sort_by(|a, b| order.cmp_terms(b, a));
                out.extend(ts.into_iter().map(|t| ModuleTerm::new(t, k)));
            }
            out
        };
        let terms = enumerate(ideals.iter().map(|o| o.terms.clone()).collect());
        let border = enumerate(ideals.iter().map(|o| o.border(1)).collect());
        let term_pos = terms.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let border_pos = border.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(OrderModule { nvars, order, ideals, terms, border, term_pos, border_pos })
    }

    /// Builds and validates an order module from raw per-component term lists.
    pub fn from_ideals(nvars: usize, order: TermOrder, ideals: Vec<Vec<Term>>) -> Result<Self> {
        let ideals = ideals
            .into_iter()
            .map(|ts| OrderIdeal::new(nvars, ts))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, order, ideals)
    }

    /// Builds an order module of the given rank from a set of module terms.
    pub fn from_terms(
        nvars: usize,
        rank: usize,
        order: TermOrder,
        terms: impl IntoIterator<Item = ModuleTerm>,
    ) -> Result<Self> {
        let mut per: Vec<Vec<Term>> = vec![Vec::new(); rank];
        for t in terms {
            if t.component >= rank {
                return Err(Error::ComponentOutOfRange { component: t.component, rank });
            }
            per[t.component].push(t.term);
        }
        Self::from_ideals(nvars, order, per)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.ideals.len()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn ideals(&self) -> &[OrderIdeal] {
        &self.ideals
    }

    /// `μ = |M|`.
    pub fn mu(&self) -> usize {
        self.terms.len()
    }

    /// `ν = |∂M|`.
    pub fn nu(&self) -> usize {
        self.border.len()
    }

    /// `t_1 e_{α_1}, ..., t_μ e_{α_μ}`.
    pub fn terms(&self) -> &[ModuleTerm] {
        &self.terms
    }

    /// `b_1 e_{β_1}, ..., b_ν e_{β_ν}`.
    pub fn border_terms(&self) -> &[ModuleTerm] {
        &self.border
    }

    pub fn contains(&self, t: &ModuleTerm) -> bool {
        self.term_pos.contains_key(t)
    }

    pub fn position(&self, t: &ModuleTerm) -> Option<usize> {
        self.term_pos.get(t).copied()
    }

    pub fn border_position(&self, t: &ModuleTerm) -> Option<usize> {
        self.border_pos.get(t).copied()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(ModuleTerm::degree).max()
    }

    /// `∂^k M` in canonical order.
    pub fn border(&self, k: u32) -> Vec<ModuleTerm> {
        if k == 1 {
            return self.border.clone();
        }
        self.collect(|o| o.border(k))
    }

    /// `∂^0 M ∪ ... ∪ ∂^k M` in canonical order.
    pub fn border_closure(&self, k: u32) -> Vec<ModuleTerm> {
        self.collect(|o| o.border_closure(k))
    }

    /// Minimal monomial generators of the complement of `M`.
    pub fn corners(&self) -> Vec<ModuleTerm> {
        self.collect(OrderIdeal::corners)
    }

    fn collect(&self, f: impl Fn(&OrderIdeal) -> BTreeSet<Term>) -> Vec<ModuleTerm> {
        let mut out = Vec::new();
        for (k, o) in self.ideals.iter().enumerate() {
            let mut ts: Vec<Term> = f(o).into_iter().collect();
            ts.sort_by(|a, b| self.order.cmp_terms(b, a));
            out.extend(ts.into_iter().map(|t| ModuleTerm::new(t, k)));
        }
        out
    }

    fn check_term(&self, t: &ModuleTerm) -> Result<()> {
        if t.component >= self.rank() {
            return Err(Error::ComponentOutOfRange { component: t.component, rank: self.rank() });
        }
        if t.term.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: t.term.nvars() });
        }
        Ok(())
    }

    /// The `M`-index of a module term.
    pub fn index(&self, t: &ModuleTerm) -> Result<u32> {
        self.check_term(t)?;
        Ok(self.ideals[t.component].index(&t.term))
    }

    /// Maximal index over the support of a nonzero vector.
    pub fn index_vec(&self, v: &VecP) -> Result<u32> {
        v.check_rank(self.rank())?;
        let mut best = None;
        for t in v.support() {
            let i = self.index(t)?;
            best = Some(best.map_or(i, |b: u32| b.max(i)));
        }
        best.ok_or(Error::ZeroVector)
    }

    /// Writes `t e_k = t' b_j e_{β_j}` with `deg t' = ind_M(t e_k) - 1` and `j`
    /// the smallest such border index. Returns `(t', j)`.
    pub fn factor_through_border(&self, t: &ModuleTerm) -> Result<(Term, usize)> {
        let ind = self.index(t)?;
        if ind == 0 {
            return Err(Error::InOrderModule(t.clone()));
        }
        let want = t.degree() + 1 - ind;
        for (j, b) in self.border.iter().enumerate() {
            if b.degree() == want && b.divides(t) {
                return Ok((t.term.quot(&b.term)?, j));
            }
        }
        unreachable!("every term outside M factors through the border")
    }
}
