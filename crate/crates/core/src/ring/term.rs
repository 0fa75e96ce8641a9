use std::fmt;

use crate::error::{Error, Result};

/// A power product `x_1^a_1 * ... * x_n^a_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn new(exponents: Vec<u32>) -> Self {
        Term(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Term(vec![0; nvars])
    }

    /// The indeterminate `x_{var+1}`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Term(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product; both terms must live in the same number of variables.
    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn try_mul(&self, other: &Term) -> Result<Term> {
        self.check_dim(other)?;
        Ok(self.mul(other))
    }

    /// `x_var * self`.
    pub fn mul_var(&self, var: usize) -> Term {
        let mut e = self.0.clone();
        e[var] += 1;
        Term(e)
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Term) -> bool {
        self.nvars() == other.nvars() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`.
    pub fn quot(&self, divisor: &Term) -> Result<Term> {
        self.check_dim(divisor)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                divisor: divisor.clone(),
                dividend: self.clone(),
            });
        }
        Ok(Term(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect()))
    }

    /// `self / x_var`, if `x_var` divides `self`.
    pub fn div_var(&self, var: usize) -> Option<Term> {
        if self.0[var] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[var] -= 1;
        Some(Term(e))
    }

    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    fn check_dim(&self, other: &Term) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    /// Writes the term as `x^2*y`, using `names` for the indeterminates.
    /// The constant term prints as `1`.
    pub fn write_with(&self, f: &mut impl fmt::Write, names: &[String]) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

/// Names used when no session header is available: `x, y, z` for up to three
/// variables, `x1..xn` beyond that.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    match nvars {
        0..=3 => ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect(),
        _ => (1..=nvars).map(|i| format!("x{i}")).collect(),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_var_names(self.nvars()))
    }
}

/// All terms of total degree `d` in `nvars` variables, in lexicographic order
/// of exponent vectors (largest `x_1` power first).
pub fn terms_of_degree(nvars: usize, d: u32) -> Vec<Term> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Term>) {
        if i + 1 == nvars {
            cur[i] = left;
            out.push(Term(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Term(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

/// All terms of degree at most `d`.
pub fn terms_up_to_degree(nvars: usize, d: u32) -> Vec<Term> {
    (0..=d).flat_map(|k| terms_of_degree(nvars, k)).collect()
}

/// A module term `t e_k`. The component is stored 0-based and printed 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ModuleTerm {
    pub term: Term,
    pub component: usize,
}

impl ModuleTerm {
    pub fn new(term: Term, component: usize) -> Self {
        ModuleTerm { term, component }
    }

    /// The unit vector `e_{component+1}`.
    pub fn unit(nvars: usize, component: usize) -> Self {
        ModuleTerm::new(Term::one(nvars), component)
    }

    pub fn degree(&self) -> u32 {
        self.term.degree()
    }

    pub fn mul_term(&self, t: &Term) -> ModuleTerm {
        ModuleTerm::new(self.term.mul(t), self.component)
    }

    pub fn mul_var(&self, var: usize) -> ModuleTerm {
        ModuleTerm::new(self.term.mul_var(var), self.component)
    }

    /// True iff `self` divides `other` in the monomial module sense
    /// (same component, term divides).
    pub fn divides(&self, other: &ModuleTerm) -> bool {
        self.component == other.component && self.term.divides(&other.term)
    }

    pub fn write_with(&self, f: &mut impl fmt::Write, names: &[String]) -> fmt::Result {
        if !self.term.is_one() {
            self.term.write_with(f, names)?;
            f.write_char('*')?;
        }
        write!(f, "e{}", self.component + 1)
    }
}

impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_var_names(self.term.nvars()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    #[test]
    fn mul_and_identity() {
        assert_eq!(t(&[1, 0]).mul(&t(&[0, 1])), t(&[1, 1]));
        assert_eq!(t(&[2, 0]).mul(&t(&[1, 0])), t(&[3, 0]));
        assert_eq!(Term::one(2).mul(&t(&[4, 7])), t(&[4, 7]));
        assert!(matches!(
            t(&[1]).try_mul(&t(&[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn divides_and_quot() {
        assert!(t(&[1, 0]).divides(&t(&[1, 1])));
        assert_eq!(t(&[1, 1]).quot(&t(&[1, 0])).unwrap(), t(&[0, 1]));
        assert!(!t(&[2, 0]).divides(&t(&[1, 1])));
        assert!(t(&[1, 1]).quot(&t(&[2, 0])).is_err());
        // lcm(x^2, xy) / x^2 = y
        let l = t(&[2, 0]).lcm(&t(&[1, 1]));
        assert_eq!(l.quot(&t(&[2, 0])).unwrap(), t(&[0, 1]));
    }

    #[test]
    fn enumerates_terms_by_degree() {
        assert_eq!(terms_of_degree(2, 2), vec![t(&[2, 0]), t(&[1, 1]), t(&[0, 2])]);
        assert_eq!(terms_up_to_degree(3, 2).len(), 10);
        assert_eq!(terms_of_degree(0, 0).len(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(t(&[2, 1]).to_string(), "x^2*y");
        assert_eq!(Term::one(2).to_string(), "1");
        assert_eq!(ModuleTerm::new(t(&[0, 1]), 1).to_string(), "y*e2");
        assert_eq!(ModuleTerm::unit(2, 0).to_string(), "e1");
    }
}
