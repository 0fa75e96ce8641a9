//! The line-oriented input language: a session header followed by sections
//! of vectors, polynomials or module terms.

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{parse_rat, FreeModule, ModuleTerm, Poly, Rat, Term, TermOrder, VecP};

/// `ring Q[x,y,...]`, `rank r`, `order name`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionHeader {
    pub vars: Vec<String>,
    pub rank: usize,
    pub order: TermOrder,
}

impl SessionHeader {
    pub fn new(vars: Vec<String>, rank: usize, order: TermOrder) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || is_unit_name(v) {
                return Err(parse_err(0, 0, format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(parse_err(0, 0, format!("duplicate variable `{v}`")));
            }
        }
        Ok(SessionHeader { vars, rank, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn space(&self) -> FreeModule {
        FreeModule::new(self.vars.len(), self.rank, self.order)
    }
}

fn is_unit_name(s: &str) -> bool {
    s.len() > 1 && s.starts_with('e') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

fn parse_err(line: usize, column: usize, message: String) -> Error {
    Error::Parse { line, column, message }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(parse_err(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Value of a subexpression: a polynomial or a vector.
#[derive(Clone, Debug)]
enum Val {
    Scalar(Poly),
    Vector(VecP),
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end: usize,
    header: &'a SessionHeader,
    allow_units: bool,
}

impl Parser<'_> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, col: usize, msg: impl Into<String>) -> Result<T> {
        Err(parse_err(self.line, col, msg.into()))
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some((Tok::Sym(s), _)) if *s == c)
    }

    fn add(&self, a: Val, b: Val, col: usize) -> Result<Val> {
        match (a, b) {
            (Val::Scalar(p), Val::Scalar(q)) => Ok(Val::Scalar(&p + &q)),
            (Val::Vector(v), Val::Vector(w)) => Ok(Val::Vector(&v + &w)),
            (Val::Scalar(p), Val::Vector(v)) | (Val::Vector(v), Val::Scalar(p)) if p.is_zero() => {
                Ok(Val::Vector(v))
            }
            _ => self.err(col, "cannot add a polynomial and a vector"),
        }
    }

    fn mul(&self, a: Val, b: Val, col: usize) -> Result<Val> {
        match (a, b) {
            (Val::Scalar(p), Val::Scalar(q)) => Ok(Val::Scalar(&p * &q)),
            (Val::Scalar(p), Val::Vector(v)) | (Val::Vector(v), Val::Scalar(p)) => Ok(Val::Vector(v.mul_poly(&p))),
            _ => self.err(col, "cannot multiply two vectors"),
        }
    }

    fn neg(a: Val) -> Val {
        match a {
            Val::Scalar(p) => Val::Scalar(-&p),
            Val::Vector(v) => Val::Vector(-&v),
        }
    }

    fn sum(&mut self) -> Result<Val> {
        let mut acc = if self.peek_sym('-') {
            self.pos += 1;
            Self::neg(self.product()?)
        } else {
            if self.peek_sym('+') {
                self.pos += 1;
            }
            self.product()?
        };
        while self.peek_sym('+') || self.peek_sym('-') {
            let minus = self.peek_sym('-');
            let col = self.col();
            self.pos += 1;
            let rhs = self.product()?;
            acc = self.add(acc, if minus { Self::neg(rhs) } else { rhs }, col)?;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Val> {
        let mut acc = self.power()?;
        while self.peek_sym('*') {
            let col = self.col();
            self.pos += 1;
            let rhs = self.power()?;
            acc = self.mul(acc, rhs, col)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Val> {
        let col = self.col();
        let base = self.atom()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        let ecol = self.col();
        let e: u32 = match self.toks.get(self.pos) {
            Some((Tok::Num(s), _)) => match s.parse() {
                Ok(e) if e > 0 => e,
                _ => return self.err(ecol, "exponent must be a positive integer"),
            },
            _ => return self.err(ecol, "expected exponent"),
        };
        self.pos += 1;
        let Val::Scalar(p) = base else {
            return self.err(col, "cannot raise a vector to a power");
        };
        let mut out = Poly::one(self.header.nvars());
        for _ in 0..e {
            out = &out * &p;
        }
        Ok(Val::Scalar(out))
    }

    fn atom(&mut self) -> Result<Val> {
        let col = self.col();
        let n = self.header.nvars();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(num), _)) => {
                self.pos += 1;
                let mut text = num;
                if self.peek_sym('/') {
                    self.pos += 1;
                    match self.toks.get(self.pos) {
                        Some((Tok::Num(d), _)) => {
                            text = format!("{text}/{d}");
                            self.pos += 1;
                        }
                        _ => return self.err(self.col(), "bad rational: expected a positive denominator"),
                    }
                }
                let c: Rat = parse_rat(&text).ok_or_else(|| parse_err(self.line, col, format!("bad rational `{text}`")))?;
                Ok(Val::Scalar(Poly::constant(n, c)))
            }
            Some((Tok::Ident(name), _)) => {
                self.pos += 1;
                if let Some(s) = self.header.vars.iter().position(|v| *v == name) {
                    return Ok(Val::Scalar(Poly::var(n, s)));
                }
                if is_unit_name(&name) && self.allow_units {
                    let k: usize = name[1..].parse().unwrap_or(0);
                    if k == 0 || k > self.header.rank {
                        return self.err(col, format!("component {name} out of range for rank {}", self.header.rank));
                    }
                    return Ok(Val::Vector(VecP::unit(n, self.header.rank, k - 1)));
                }
                self.err(col, format!("unknown variable `{name}`"))
            }
            Some((Tok::Sym('('), _)) => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.peek_sym(')') {
                    return self.err(self.col(), "expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Some((Tok::Sym(c), _)) => self.err(col, format!("unexpected `{c}`")),
            None => self.err(col, "unexpected end of input"),
        }
    }
}

fn parse_val(src: &str, header: &SessionHeader, line: usize, allow_units: bool) -> Result<Val> {
    let toks = tokenize(src, line)?;
    let end = src.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, line, end, header, allow_units };
    let v = p.sum()?;
    if p.pos < p.toks.len() {
        return p.err(p.col(), "unexpected trailing input");
    }
    Ok(v)
}

/// Parses a vector such as `(3*x - 1)*e2 - 2*e1`; `0` is the zero vector.
pub fn parse_vector(src: &str, header: &SessionHeader) -> Result<VecP> {
    parse_vector_at(src, header, 1)
}

pub fn parse_vector_at(src: &str, header: &SessionHeader, line: usize) -> Result<VecP> {
    match parse_val(src, header, line, true)? {
        Val::Vector(v) => Ok(v),
        Val::Scalar(p) if p.is_zero() => Ok(VecP::zero(header.nvars(), header.rank)),
        Val::Scalar(_) => Err(parse_err(line, 1, "expected a vector with unit vectors e1, e2, ...".into())),
    }
}

/// Parses a polynomial such as `x^2 + x*y`.
pub fn parse_poly(src: &str, header: &SessionHeader) -> Result<Poly> {
    parse_poly_at(src, header, 1)
}

pub fn parse_poly_at(src: &str, header: &SessionHeader, line: usize) -> Result<Poly> {
    match parse_val(src, header, line, false)? {
        Val::Scalar(p) => Ok(p),
        Val::Vector(_) => unreachable!("units are disabled"),
    }
}

/// Parses a module term such as `x^2*y*e1`.
pub fn parse_module_term_at(src: &str, header: &SessionHeader, line: usize) -> Result<ModuleTerm> {
    let v = parse_vector_at(src, header, line)?;
    let term = match v.iter().next() {
        Some((t, c)) if v.len() == 1 && c.is_one() => Some(t.clone()),
        _ => None,
    };
    term.ok_or_else(|| parse_err(line, 1, format!("`{}` is not a module term", src.trim())))
}

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub header: SessionHeader,
    /// Section name and its `(line number, text)` entries, in file order.
    pub sections: Vec<(String, Vec<(usize, String)>)>,
}

pub const SECTIONS: [&str; 5] = ["vectors", "syzygy", "ideal", "subideal", "ordermodule"];

impl Session {
    pub fn parse(text: &str) -> Result<Session> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let mut next = |key: &str| -> Result<(usize, String)> {
            match lines.next() {
                Some((n, l)) => match l.strip_prefix(key) {
                    Some(rest) if rest.starts_with(char::is_whitespace) => Ok((n, rest.trim().to_string())),
                    _ => Err(parse_err(n, 1, format!("expected `{key} ...`"))),
                },
                None => Err(parse_err(0, 0, format!("missing `{key}` line"))),
            }
        };
        let (n, ring) = next("ring")?;
        let inner = ring
            .strip_prefix("Q[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_err(n, 6, "expected `Q[x,y,...]`".into()))?;
        let vars: Vec<String> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|v| v.trim().to_string()).collect()
        };
        let (n, rank) = next("rank")?;
        let rank: usize = rank.parse().map_err(|_| parse_err(n, 6, format!("bad rank `{rank}`")))?;
        let (n, order) = next("order")?;
        let order = TermOrder::from_name(&order)
            .ok_or_else(|| parse_err(n, 7, format!("unknown ordering `{order}`; use degrevlex, deglex or lex")))?;
        let header = SessionHeader::new(vars, rank, order).map_err(|e| match e {
            Error::Parse { message, .. } => parse_err(1, 1, message),
            e => e,
        })?;

        let mut sections: Vec<(String, Vec<(usize, String)>)> = Vec::new();
        for (n, l) in lines {
            if let Some(name) = l.strip_suffix(':') {
                if !SECTIONS.contains(&name) {
                    return Err(parse_err(n, 1, format!("unknown section `{name}`")));
                }
                if sections.iter().any(|(s, _)| s == name) {
                    return Err(parse_err(n, 1, format!("duplicate section `{name}`")));
                }
                sections.push((name.to_string(), Vec::new()));
            } else {
                match sections.last_mut() {
                    Some((_, entries)) => entries.push((n, l.to_string())),
                    None => return Err(parse_err(n, 1, "entry before any section".into())),
                }
            }
        }
        Ok(Session { header, sections })
    }

    pub fn has(&self, name: &str) -> bool {
        self.sections.iter().any(|(s, _)| s == name)
    }

    fn entries(&self, name: &str) -> &[(usize, String)] {
        self.sections.iter().find(|(s, _)| s == name).map_or(&[], |(_, e)| e)
    }

    pub fn vectors(&self, name: &str) -> Result<Vec<VecP>> {
        self.entries(name).iter().map(|(n, l)| parse_vector_at(l, &self.header, *n)).collect()
    }

    pub fn polys(&self, name: &str) -> Result<Vec<Poly>> {
        self.entries(name).iter().map(|(n, l)| parse_poly_at(l, &self.header, *n)).collect()
    }

    /// Module terms, comma separated, over any number of lines.
    pub fn module_terms(&self, name: &str) -> Result<Vec<ModuleTerm>> {
        let mut out = Vec::new();
        for (n, l) in self.entries(name) {
            for part in l.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                out.push(parse_module_term_at(part, &self.header, *n)?);
            }
        }
        Ok(out)
    }
}

/// Prints `v` in the input syntax.
pub fn print_vector(v: &VecP, header: &SessionHeader) -> String {
    v.to_string_with(&header.vars, &header.order)
}

pub fn print_poly(p: &Poly, header: &SessionHeader) -> String {
    p.to_string_with(&header.vars, &header.order)
}

pub fn print_term(t: &ModuleTerm, header: &SessionHeader) -> String {
    let mut s = String::new();
    let _ = t.write_with(&mut s, &header.vars);
    s
}

/// Prints a term of `T^n`, with `1` for the empty product.
pub fn print_monomial(t: &Term, header: &SessionHeader) -> String {
    if t.is_one() {
        return "1".into();
    }
    let mut s = String::new();
    let _ = t.write_with(&mut s, &header.vars);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, BaseOrder};

    fn hdr() -> SessionHeader {
        SessionHeader::new(vec!["x".into(), "y".into()], 2, TermOrder::new(BaseOrder::DegRevLex)).unwrap()
    }

    fn mt(e: &[u32], k: usize) -> ModuleTerm {
        ModuleTerm::new(Term::new(e.to_vec()), k)
    }

    #[test]
    fn division_input() {
        let v = parse_vector("x^3*e1 + x*y*e1 + x^3*y*e2", &hdr()).unwrap();
        let want = VecP::from_terms(2, 2, [(mt(&[3, 0], 0), int(1)), (mt(&[1, 1], 0), int(1)), (mt(&[3, 1], 1), int(1))]);
        assert_eq!(v, want);
    }

    #[test]
    fn parenthesized_coefficients() {
        let v = parse_vector("(-2)*e1 + (3*x - 1)*e2", &hdr()).unwrap();
        let want = VecP::from_terms(2, 2, [(mt(&[0, 0], 0), int(-2)), (mt(&[1, 0], 1), int(3)), (mt(&[0, 0], 1), int(-1))]);
        assert_eq!(v, want);
        assert_eq!(parse_vector("0", &hdr()).unwrap(), VecP::zero(2, 2));
        assert_eq!(parse_vector(" 4 / 3 * e1 - 4/3*e1", &hdr()).unwrap(), VecP::zero(2, 2));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_vector("x*e1 + z*e2", &hdr()).unwrap_err();
        assert_eq!(e, Error::Parse { line: 1, column: 8, message: "unknown variable `z`".into() });
        assert!(matches!(parse_vector("x*e3", &hdr()), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_vector("1/0*e1", &hdr()), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(parse_vector("1/-2*e1", &hdr()), Err(Error::Parse { .. })));
        assert!(matches!(parse_vector("e1*e2", &hdr()), Err(Error::Parse { .. })));
        assert!(matches!(parse_vector("x + e1", &hdr()), Err(Error::Parse { .. })));
        assert!(matches!(parse_vector("(x*e1", &hdr()), Err(Error::Parse { column: 6, .. })));
        assert!(matches!(parse_poly("x*e1", &hdr()), Err(Error::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        let h = hdr();
        for s in ["x*e1 + y*e1 + e1 + e2", "x^2*y*e1 - 4/3*e1 + 2/3*e2", "-x*e2", "0"] {
            assert_eq!(print_vector(&parse_vector(s, &h).unwrap(), &h), s);
        }
    }

    #[test]
    fn session_file() {
        let text = "ring Q[x,y]\nrank 2\norder degrevlex\n# comment\nvectors:\n(-2)*e1 + (3*x-1)*e2\n\nideal:\nx^2 + x*y\nordermodule:\ne1, x*e1\ne2\n";
        let s = Session::parse(text).unwrap();
        assert_eq!(s.header, hdr());
        assert_eq!(s.vectors("vectors").unwrap().len(), 1);
        assert_eq!(s.polys("ideal").unwrap()[0].len(), 2);
        assert_eq!(s.module_terms("ordermodule").unwrap(), vec![mt(&[0, 0], 0), mt(&[1, 0], 0), mt(&[0, 0], 1)]);
        assert!(s.vectors("syzygy").unwrap().is_empty());
        assert!(matches!(Session::parse("ring Q[x]\nrank 1\norder foo\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Session::parse("ring Q[x,x]\nrank 1\norder lex\n"), Err(Error::Parse { .. })));
        assert!(matches!(Session::parse("ring Q[x]\nrank 1\norder lex\nbogus:\n"), Err(Error::Parse { line: 4, .. })));
    }
}
