use std::cmp::Ordering;

use super::term::{ModuleTerm, Term};

/// Term ordering on `T^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum BaseOrder {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

/// How the base ordering is extended to module terms `t e_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum ModuleExtension {
    /// Terms first; on a tie the smaller component wins (`e1 > e2`).
    #[default]
    SigmaPos,
    /// Components first (`e1` largest), then terms. Not degree compatible;
    /// used internally as an elimination ordering for syzygies.
    PosSigma,
}

/// A module term ordering.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct TermOrder {
    pub base: BaseOrder,
    pub ext: ModuleExtension,
}

impl TermOrder {
    pub const fn new(base: BaseOrder) -> Self {
        TermOrder { base, ext: ModuleExtension::SigmaPos }
    }

    pub const fn deg_rev_lex() -> Self {
        Self::new(BaseOrder::DegRevLex)
    }

    pub const fn with_extension(self, ext: ModuleExtension) -> Self {
        TermOrder { base: self.base, ext }
    }

    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.base {
            BaseOrder::Lex => ea.cmp(eb),
            BaseOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            BaseOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // the last differing exponent decides; smaller exponent is larger
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn cmp(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        let pos = || b.component.cmp(&a.component);
        match self.ext {
            ModuleExtension::SigmaPos => self.cmp_terms(&a.term, &b.term).then_with(pos),
            ModuleExtension::PosSigma => pos().then_with(|| self.cmp_terms(&a.term, &b.term)),
        }
    }

    /// A key whose lexicographic order agrees with [`TermOrder::cmp`].
    pub fn key(&self, t: &ModuleTerm) -> Vec<i64> {
        let e = t.term.exponents();
        let mut k = Vec::with_capacity(e.len() + 2);
        let pos = -(t.component as i64);
        if self.ext == ModuleExtension::PosSigma {
            k.push(pos);
        }
        match self.base {
            BaseOrder::DegRevLex => {
                k.push(t.term.degree() as i64);
                k.extend(e.iter().rev().map(|&a| -(a as i64)));
            }
            BaseOrder::DegLex => {
                k.push(t.term.degree() as i64);
                k.extend(e.iter().map(|&a| a as i64));
            }
            BaseOrder::Lex => k.extend(e.iter().map(|&a| a as i64)),
        }
        if self.ext == ModuleExtension::SigmaPos {
            k.push(pos);
        }
        k
    }

    /// `deg(t) > deg(t')` implies `t e_k > t' e_l`.
    pub fn is_degree_compatible(&self) -> bool {
        self.ext == ModuleExtension::SigmaPos && self.base != BaseOrder::Lex
    }

    /// Sorts module terms into descending order.
    pub fn sort_desc(&self, terms: &mut [ModuleTerm]) {
        terms.sort_by(|a, b| self.cmp(b, a));
    }

    pub fn name(&self) -> &'static str {
        match self.base {
            BaseOrder::DegRevLex => "degrevlex",
            BaseOrder::DegLex => "deglex",
            BaseOrder::Lex => "lex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "degrevlex" => Some(Self::new(BaseOrder::DegRevLex)),
            "deglex" => Some(Self::new(BaseOrder::DegLex)),
            "lex" => Some(Self::new(BaseOrder::Lex)),
            _ => None,
        }
    }
}
