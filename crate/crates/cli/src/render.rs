//! Text and JSON renderings of library values.

use modbb::exactla::RatMatrix;
use modbb::input::{print_poly, print_term, print_vector, SessionHeader};
use modbb::ring::{ModuleTerm, Poly, Rat, TermOrder, VecP};
use serde_json::{json, Value};

pub struct Render<'a> {
    pub header: &'a SessionHeader,
}

impl Render<'_> {
    pub fn order(&self) -> &TermOrder {
        &self.header.order
    }

    pub fn vector(&self, v: &VecP) -> String {
        print_vector(v, self.header)
    }

    pub fn poly(&self, p: &Poly) -> String {
        print_poly(p, self.header)
    }

    pub fn term(&self, t: &ModuleTerm) -> String {
        print_term(t, self.header)
    }

    /// `{t1, t2, ...}`.
    pub fn term_set(&self, terms: &[ModuleTerm]) -> String {
        let items: Vec<String> = terms.iter().map(|t| self.term(t)).collect();
        format!("{{{}}}", items.join(", "))
    }

    /// `t*f_k` for a term of the `F`-order ideal.
    pub fn f_term(&self, t: &ModuleTerm) -> String {
        let k = t.component + 1;
        if t.term.is_one() {
            format!("f{k}")
        } else {
            format!("{}*f{k}", modbb::input::print_monomial(&t.term, self.header))
        }
    }

    pub fn vector_json(&self, v: &VecP) -> Value {
        Value::Array(
            v.sorted_terms(self.order())
                .into_iter()
                .map(|(t, c)| {
                    json!({
                        "coeff": c.to_string(),
                        "component": t.component + 1,
                        "exponents": t.term.exponents(),
                    })
                })
                .collect(),
        )
    }

    pub fn poly_json(&self, p: &Poly) -> Value {
        Value::Array(
            p.sorted_terms(self.order())
                .into_iter()
                .map(|(t, c)| json!({ "coeff": c.to_string(), "exponents": t.exponents() }))
                .collect(),
        )
    }

    pub fn terms_json(&self, terms: &[ModuleTerm]) -> Value {
        Value::Array(
            terms
                .iter()
                .map(|t| json!({ "component": t.component + 1, "exponents": t.term.exponents() }))
                .collect(),
        )
    }

    pub fn vectors_json(&self, vs: &[VecP]) -> Value {
        Value::Array(vs.iter().map(|v| self.vector_json(v)).collect())
    }
}

pub fn rats_json(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(|r| Value::String(r.to_string())).collect())
}

pub fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| rats_json(m.row(i))).collect())
}

/// Numbered lines `name1 = ...`.
pub fn numbered(out: &mut String, name: &str, items: impl IntoIterator<Item = String>) {
    for (j, s) in items.into_iter().enumerate() {
        out.push_str(&format!("{name}{} = {s}\n", j + 1));
    }
}
