use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::order::TermOrder;
use super::rat::Rat;
use super::term::{default_var_names, Term};

/// Sparse polynomial in `Q[x_1..x_n]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Term, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(Term::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(Term::var(nvars, var), Rat::one())
    }

    pub fn monomial(t: Term, c: Rat) -> Self {
        let mut p = Poly::zero(t.nvars());
        p.add_term(t, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Term, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (t, c) in terms {
            debug_assert_eq!(t.nvars(), nvars);
            p.add_term(t, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Term) -> Rat {
        self.terms.get(t).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Term, &Rat)> {
        self.terms.iter()
    }

    /// Adds `c * t` in place.
    pub fn add_term(&mut self, t: Term, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Term::degree).max()
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&Term, &Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp_terms(a.0, b.0))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, t: &Term) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(s, a)| (s.mul(t), a.clone())).collect(),
        }
    }

    /// Terms in descending order.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Term, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp_terms(b.0, a.0));
        v
    }

    pub fn write_with(
        &self,
        f: &mut impl fmt::Write,
        names: &[String],
        order: &TermOrder,
    ) -> fmt::Result {
        let items = self.sorted_terms(order).into_iter().map(|(t, c)| {
            let mono = (!t.is_one()).then(|| {
                let mut s = String::new();
                let _ = t.write_with(&mut s, names);
                s
            });
            (c.clone(), mono)
        });
        write_sum(f, items)
    }

    pub fn to_string_with(&self, names: &[String], order: &TermOrder) -> String {
        let mut s = String::new();
        let _ = self.write_with(&mut s, names, order);
        s
    }
}

/// Writes `c1*m1 + c2*m2 - ...` with the sign carried on the numerator.
/// A `None` monomial is the constant 1.
pub(crate) fn write_sum(
    f: &mut impl fmt::Write,
    items: impl Iterator<Item = (Rat, Option<String>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in items {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_char('-')?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let a = c.abs();
        match mono {
            None => write!(f, "{a}")?,
            Some(m) if a.is_one() => f.write_str(&m)?,
            Some(m) => write!(f, "{a}*{m}")?,
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_var_names(self.nvars), &TermOrder::default())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        let mut out = Poly::zero(self.nvars);
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                out.add_term(s.mul(t), a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat::{int, rat};

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }

    #[test]
    fn arithmetic_purges_zeros() {
        let p = &x() + &y();
        assert!((&p - &p).is_zero());
        let q = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(q.len(), 2);
        assert_eq!(q.degree(), Some(2));
        assert_eq!(Poly::zero(2).degree(), None);
    }

    #[test]
    fn prints_sorted_with_signs() {
        let p = Poly::from_terms(
            2,
            [
                (Term::one(2), rat(2, 3)),
                (Term::new(vec![1, 1]), int(-1)),
                (Term::new(vec![2, 0]), int(1)),
                (Term::new(vec![0, 1]), rat(-4, 3)),
            ],
        );
        assert_eq!(p.to_string(), "x^2 - x*y - 4/3*y + 2/3");
        assert_eq!((-&x()).to_string(), "-x");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }
}
