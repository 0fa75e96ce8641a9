use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::order::TermOrder;
use super::poly::{write_sum, Poly};
use super::rat::Rat;
use super::term::{default_var_names, ModuleTerm, Term};
use crate::error::{Error, Result};

/// Sparse element of `P^r`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VecP {
    nvars: usize,
    rank: usize,
    entries: BTreeMap<ModuleTerm, Rat>,
}

impl VecP {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        VecP { nvars, rank, entries: BTreeMap::new() }
    }

    /// The unit vector `e_{k+1}`.
    pub fn unit(nvars: usize, rank: usize, k: usize) -> Self {
        Self::monomial(rank, ModuleTerm::unit(nvars, k), Rat::one())
    }

    pub fn monomial(rank: usize, t: ModuleTerm, c: Rat) -> Self {
        assert!(t.component < rank, "component out of range");
        let mut v = VecP::zero(t.term.nvars(), rank);
        v.add_term(t, c);
        v
    }

    pub fn from_terms(
        nvars: usize,
        rank: usize,
        terms: impl IntoIterator<Item = (ModuleTerm, Rat)>,
    ) -> Self {
        let mut v = VecP::zero(nvars, rank);
        for (t, c) in terms {
            assert!(t.component < rank, "component out of range");
            v.add_term(t, c);
        }
        v
    }

    /// `(p_1, ..., p_r)`.
    pub fn from_components(nvars: usize, comps: &[Poly]) -> Self {
        let mut v = VecP::zero(nvars, comps.len());
        for (k, p) in comps.iter().enumerate() {
            for (t, c) in p.iter() {
                v.add_term(ModuleTerm::new(t.clone(), k), c.clone());
            }
        }
        v
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, t: &ModuleTerm) -> Rat {
        self.entries.get(t).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn contains(&self, t: &ModuleTerm) -> bool {
        self.entries.contains_key(t)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ModuleTerm, &Rat)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ModuleTerm> {
        self.entries.keys()
    }

    /// Adds `c * t` in place.
    pub fn add_term(&mut self, t: ModuleTerm, c: Rat) {
        debug_assert!(t.component < self.rank && t.term.nvars() == self.nvars);
        if c.is_zero() {
            return;
        }
        match self.entries.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += a * t * g`.
    pub fn add_scaled(&mut self, a: &Rat, t: &Term, g: &VecP) {
        assert_eq!(self.rank, g.rank, "rank mismatch");
        if a.is_zero() {
            return;
        }
        for (s, c) in &g.entries {
            self.add_term(s.mul_term(t), a * c);
        }
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank != rank {
            return Err(Error::RankMismatch { expected: rank, found: self.rank });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rat) -> VecP {
        if c.is_zero() {
            return VecP::zero(self.nvars, self.rank);
        }
        VecP {
            nvars: self.nvars,
            rank: self.rank,
            entries: self.entries.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, t: &Term) -> VecP {
        VecP {
            nvars: self.nvars,
            rank: self.rank,
            entries: self.entries.iter().map(|(s, a)| (s.mul_term(t), a.clone())).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> VecP {
        let mut out = VecP::zero(self.nvars, self.rank);
        for (t, c) in p.iter() {
            out.add_scaled(c, t, self);
        }
        out
    }

    /// The `k`-th coordinate polynomial (0-based).
    pub fn component(&self, k: usize) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.entries
                .iter()
                .filter(|(t, _)| t.component == k)
                .map(|(t, c)| (t.term.clone(), c.clone())),
        )
    }

    pub fn components(&self) -> Vec<Poly> {
        (0..self.rank).map(|k| self.component(k)).collect()
    }

    /// Maximal total degree over the support, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.entries.keys().map(ModuleTerm::degree).max()
    }

    pub fn leading_term(&self, order: &TermOrder) -> Result<(ModuleTerm, Rat)> {
        self.leading(order)
            .map(|(t, c)| (t.clone(), c.clone()))
            .ok_or(Error::ZeroVector)
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&ModuleTerm, &Rat)> {
        self.entries.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Divides by the leading coefficient. The zero vector is returned as is.
    pub fn monic(&self, order: &TermOrder) -> VecP {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Entries in descending order.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&ModuleTerm, &Rat)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Re-embeds into rank `rank`, shifting every component by `offset`.
    pub fn shift(&self, rank: usize, offset: usize) -> VecP {
        VecP::from_terms(
            self.nvars,
            rank,
            self.entries
                .iter()
                .map(|(t, c)| (ModuleTerm::new(t.term.clone(), t.component + offset), c.clone())),
        )
    }

    pub fn write_with(
        &self,
        f: &mut impl fmt::Write,
        names: &[String],
        order: &TermOrder,
    ) -> fmt::Result {
        let items = self.sorted_terms(order).into_iter().map(|(t, c)| {
            let mut s = String::new();
            let _ = t.write_with(&mut s, names);
            (c.clone(), Some(s))
        });
        write_sum(f, items)
    }

    pub fn to_string_with(&self, names: &[String], order: &TermOrder) -> String {
        let mut s = String::new();
        let _ = self.write_with(&mut s, names, order);
        s
    }
}

impl fmt::Display for VecP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_var_names(self.nvars), &TermOrder::default())
    }
}

impl Add for &VecP {
    type Output = VecP;
    fn add(self, rhs: &VecP) -> VecP {
        let mut out = self.clone();
        out.add_scaled(&Rat::one(), &Term::one(self.nvars), rhs);
        out
    }
}

impl Sub for &VecP {
    type Output = VecP;
    fn sub(self, rhs: &VecP) -> VecP {
        let mut out = self.clone();
        out.add_scaled(&-Rat::one(), &Term::one(self.nvars), rhs);
        out
    }
}

impl Neg for &VecP {
    type Output = VecP;
    fn neg(self) -> VecP {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat::int;

    fn mt(e: &[u32], k: usize) -> ModuleTerm {
        ModuleTerm::new(Term::new(e.to_vec()), k)
    }

    #[test]
    fn leading_term_uses_degree_then_position() {
        let v = VecP::from_terms(
            2,
            2,
            [(mt(&[3, 0], 0), int(1)), (mt(&[1, 1], 0), int(1)), (mt(&[3, 1], 1), int(1))],
        );
        let o = TermOrder::default();
        assert_eq!(v.leading_term(&o).unwrap().0, mt(&[3, 1], 1));
        assert_eq!(VecP::zero(2, 2).leading_term(&o), Err(Error::ZeroVector));
    }

    #[test]
    fn mul_poly_matches_hand_expansion() {
        // y * (x^3 e2 - e1) = x^3 y e2 - y e1
        let g = VecP::from_terms(2, 2, [(mt(&[3, 0], 1), int(1)), (mt(&[0, 0], 0), int(-1))]);
        let yg = g.mul_poly(&Poly::var(2, 1));
        assert_eq!(yg.to_string(), "x^3*y*e2 - y*e1");
        assert!((&g + &-&g).is_zero());
    }

    #[test]
    fn components_round_trip() {
        let p = &Poly::var(2, 0) - &Poly::one(2);
        let q = Poly::constant(2, int(-2));
        let v = VecP::from_components(2, &[q.clone(), p.clone()]);
        assert_eq!(v.components(), vec![q, p]);
        assert_eq!(v.to_string(), "x*e2 - 2*e1 - e2");
    }
}
