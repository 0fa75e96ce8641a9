//! Subcommand implementations.

use std::io::Read;
use std::path::Path;

use modbb::charsuite::{buchberger_check, mult_matrices, PairMode};
use modbb::groebner::groebner_basis;
use modbb::input::{parse_vector, Session};
use modbb::mbba::{module_border_basis, MbbaOptions};
use modbb::ordstruct::OrderModule;
use modbb::prebasis::Prebasis;
use modbb::quotient::quotient_border_basis;
use modbb::ring::{Poly, VecP};
use modbb::subideal::{subideal_border_basis, Formal, SubidealContext};
use serde_json::{json, Value};

use crate::render::{matrix_json, numbered, rats_json, Render};
use crate::{Cli, Command, Criterion, Failure, Report, EXIT_OK, EXIT_PARSE, EXIT_USAGE};

pub(crate) fn execute(cli: &Cli) -> Result<Report, Failure> {
    let opts = MbbaOptions { max_degree: cli.max_degree, preflight: cli.preflight };
    match &cli.command {
        Command::Compute { file } => compute(&load(file)?, &opts),
        Command::Divide { file, vector } => divide(&load(file)?, vector),
        Command::Check { file, criterion } => check(&load(file)?, *criterion),
        Command::Multmat { file } => multmat(&load(file)?),
        Command::Groebner { file } => groebner(&load(file)?),
        Command::Quotient { file } => quotient(&load(file)?, &opts),
        Command::Subideal { file } => subideal(&load(file)?, &opts),
        Command::Selftest { seed, cases } => Ok(crate::selftest::run(*seed, *cases)),
    }
}

/// Reads and parses an input file; `-` reads stdin.
fn load(path: &Path) -> Result<Session, Failure> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    Ok(Session::parse(&text)?)
}

fn require(s: &Session, name: &str) -> Result<(), Failure> {
    if s.has(name) {
        Ok(())
    } else {
        Err(Failure::new(EXIT_PARSE, format!("input has no `{name}:` section")))
    }
}

fn vectors(s: &Session, name: &str) -> Result<Vec<VecP>, Failure> {
    require(s, name)?;
    Ok(s.vectors(name)?)
}

fn polys(s: &Session, name: &str) -> Result<Vec<Poly>, Failure> {
    require(s, name)?;
    Ok(s.polys(name)?)
}

fn prebasis(s: &Session) -> Result<Prebasis, Failure> {
    require(s, "ordermodule")?;
    let h = &s.header;
    let om = OrderModule::from_terms(h.nvars(), h.rank, h.order, s.module_terms("ordermodule")?)?;
    Ok(Prebasis::from_vectors(om, &vectors(s, "vectors")?)?)
}

fn ok(pretty: String, json: Value) -> Result<Report, Failure> {
    Ok(Report { pretty, json, code: EXIT_OK })
}

fn compute(s: &Session, opts: &MbbaOptions) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let gens = vectors(s, "vectors")?;
    let bb = module_border_basis(&gens, &s.header.space(), opts)?;
    let om = bb.order_module();
    let mut out = format!("M = {}\n", r.term_set(om.terms()));
    numbered(&mut out, "G", bb.generators().iter().map(|g| r.vector(g)));
    ok(
        out,
        json!({
            "order_module": r.terms_json(om.terms()),
            "border": r.terms_json(om.border_terms()),
            "basis": r.vectors_json(bb.generators()),
        }),
    )
}

fn divide(s: &Session, vector: &str) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let g = prebasis(s)?;
    let v = parse_vector(vector, &s.header)?;
    let d = g.divide(&v)?;
    let nr = g.from_coords(&d.remainder);
    let mut out = String::new();
    numbered(&mut out, "q", d.quotients.iter().map(|q| r.poly(q)));
    out.push_str(&format!("NR = {}\n", r.vector(&nr)));
    ok(
        out,
        json!({
            "quotients": Value::Array(d.quotients.iter().map(|q| r.poly_json(q)).collect()),
            "remainder": r.vector_json(&nr),
            "remainder_coords": rats_json(&d.remainder),
        }),
    )
}

fn check(s: &Session, criterion: Criterion) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let g = prebasis(s)?;
    let mode = match criterion {
        Criterion::AllPairs => PairMode::AllPairs,
        Criterion::Neighbors | Criterion::Matrices => PairMode::NeighborsOnly,
    };
    if criterion == Criterion::Matrices {
        return match mult_matrices(&g).commuting_witness() {
            None => ok("border basis\n".into(), json!({ "border_basis": true })),
            Some((a, b)) => {
                let (xa, xb) = (&s.header.vars[a], &s.header.vars[b]);
                ok(
                    format!("NOT a border basis; X_{xa}*X_{xb} != X_{xb}*X_{xa}\n"),
                    json!({ "border_basis": false, "noncommuting": [a + 1, b + 1] }),
                )
            }
        };
    }
    match buchberger_check(&g, mode) {
        None => ok("border basis\n".into(), json!({ "border_basis": true })),
        Some(w) => ok(
            format!("NOT a border basis; witness SV(G{},G{}), NR = {}\n", w.i + 1, w.j + 1, r.vector(&w.nr)),
            json!({
                "border_basis": false,
                "witness": { "pair": [w.i + 1, w.j + 1], "nr": r.vector_json(&w.nr) },
            }),
        ),
    }
}

fn multmat(s: &Session) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let g = prebasis(s)?;
    let mm = mult_matrices(&g);
    let mut out = format!("M = {}\n", r.term_set(g.order_module().terms()));
    let mut mats = serde_json::Map::new();
    for (var, m) in s.header.vars.iter().zip(&mm.mats) {
        out.push_str(&format!("X_{var} =\n{m}"));
        mats.insert(var.clone(), matrix_json(m));
    }
    let commute = mm.commute();
    out.push_str(if commute { "matrices commute\n" } else { "matrices do not commute\n" });
    ok(
        out,
        json!({
            "order_module": r.terms_json(g.order_module().terms()),
            "matrices": mats,
            "commute": commute,
        }),
    )
}

fn groebner(s: &Session) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let gb = groebner_basis(&vectors(s, "vectors")?, &s.header.order);
    let mut out = String::new();
    numbered(&mut out, "g", gb.iter().map(|g| r.vector(g)));
    ok(out, json!({ "groebner_basis": r.vectors_json(&gb) }))
}

fn quotient(s: &Session, opts: &MbbaOptions) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let u = vectors(s, "vectors")?;
    let syz = vectors(s, "syzygy")?;
    let qb = quotient_border_basis(&u, &syz, &s.header.space(), opts)?;
    let q = &qb.quotient;
    let g = q.canonical();
    let mut out = format!("M^S = {}\n", r.term_set(q.terms()));
    numbered(&mut out, "G", g.iter().map(|v| r.vector(v)));
    ok(
        out,
        json!({
            "order_module": r.terms_json(q.terms()),
            "border": r.terms_json(q.border_terms()),
            "basis": r.vectors_json(&g),
        }),
    )
}

fn subideal(s: &Session, opts: &MbbaOptions) -> Result<Report, Failure> {
    let r = Render { header: &s.header };
    let h = polys(s, "ideal")?;
    let f = polys(s, "subideal")?;
    let ctx = SubidealContext::new(f, s.header.order.base)?;
    let sb = subideal_border_basis(&h, &ctx, opts)?;
    let order = ctx.space().order;
    let names = &s.header.vars;
    let formal = |v: &VecP| Formal { v, names, order: &order }.to_string();
    let terms = sb.order_ideal.terms();
    let items: Vec<String> = terms.iter().map(|t| r.f_term(t)).collect();
    let mut out = format!("O_F = {{{}}}\n", items.join(", "));
    numbered(
        &mut out,
        "g",
        sb.formal.iter().zip(&sb.expanded).map(|(v, e)| format!("{} = {}", formal(v), r.poly(e))),
    );
    let gens: Vec<Value> = sb
        .formal
        .iter()
        .zip(&sb.expanded)
        .map(|(v, e)| json!({ "formal": r.vector_json(v), "expanded": r.poly_json(e) }))
        .collect();
    ok(out, json!({ "order_ideal": r.terms_json(terms), "basis": gens }))
}
