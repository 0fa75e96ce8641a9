//! `modbb selftest`: worked examples plus seeded random consistency checks.

use std::collections::BTreeSet;

use modbb::charsuite::{buchberger_check, mult_matrices, PairMode};
use modbb::fixtures;
use modbb::groebner::{groebner_basis, naive_border_basis};
use modbb::input::{parse_vector, print_vector};
use modbb::mbba::{module_border_basis, MbbaOptions};
use modbb::quotient::quotient_border_basis;
use modbb::random;
use modbb::ring::{BaseOrder, VecP};
use modbb::subideal::{subideal_border_basis, Formal, SubidealContext};
use rand::Rng;
use serde_json::json;

use crate::{Report, EXIT_OK, EXIT_SELFTEST};

type Outcome = Result<String, String>;

fn as_set(vs: &[VecP]) -> BTreeSet<String> {
    vs.iter().map(VecP::to_string).collect()
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn golden_division() -> Outcome {
    let g = fixtures::prebasis();
    let d = g.divide(&fixtures::division_input()).map_err(|e| e.to_string())?;
    let q: Vec<String> = d.quotients.iter().map(ToString::to_string).collect();
    let nr = g.from_coords(&d.remainder);
    let want_nr = fixtures::vecs(2, &["y*e1 - x*e2 + 2*e2"]).remove(0);
    if q != ["x", "2", "0", "y", "0", "0", "0"] || nr != want_nr {
        return fail(format!("quotients {q:?}, NR = {nr}"));
    }
    Ok(format!("NR = {nr}"))
}

fn golden_witness() -> Outcome {
    let want = fixtures::vecs(2, &["x*e1 + y*e1 + e1 + e2"]).remove(0);
    match buchberger_check(&fixtures::prebasis(), PairMode::NeighborsOnly) {
        Some(w) if (w.i, w.j) == (0, 1) && w.nr == want => Ok(format!("SV(G1,G2), NR = {}", w.nr)),
        other => fail(format!("{other:?}")),
    }
}

fn golden_mbba() -> Outcome {
    let space = fixtures::space();
    let gens = fixtures::mbba_generators();
    let bb = module_border_basis(&gens, &space, &MbbaOptions::default()).map_err(|e| e.to_string())?;
    if bb.mu() != 2 || as_set(bb.generators()) != as_set(&fixtures::mbba_basis()) {
        return fail(format!("G = {:?}", as_set(bb.generators())));
    }
    if as_set(&bb.corner_subset()) != as_set(&groebner_basis(&gens, &space.order)) {
        return fail("corner subset differs from the reduced Groebner basis");
    }
    Ok("M = {e1, e2}, four vectors".into())
}

fn golden_quotient() -> Outcome {
    let space = fixtures::space();
    let qb = quotient_border_basis(&fixtures::u_generators(), &[fixtures::s_generator()], &space, &MbbaOptions::default())
        .map_err(|e| e.to_string())?;
    let q = &qb.quotient;
    let want: Vec<VecP> = fixtures::mbba_basis().iter().map(|g| q.context().canonical(g)).collect();
    if q.terms().len() != 2 || as_set(&q.canonical()) != as_set(&want) {
        return fail(format!("M^S = {:?}, G^S = {:?}", q.terms(), as_set(&q.canonical())));
    }
    Ok("M^S = {e1, e2}".into())
}

fn golden_subideal() -> Outcome {
    let ctx = SubidealContext::new(fixtures::subideal_f(), BaseOrder::DegRevLex).map_err(|e| e.to_string())?;
    let sb = subideal_border_basis(&fixtures::subideal_h(), &ctx, &MbbaOptions::default()).map_err(|e| e.to_string())?;
    let names = ["x".to_string(), "y".to_string()];
    let order = ctx.space().order;
    let got: BTreeSet<String> = sb.formal.iter().map(|v| Formal { v, names: &names, order: &order }.to_string()).collect();
    let want: BTreeSet<String> = ["x*f1 + 4/3*f1 + 2/3*f2", "x*f2 - 2/3*f1 - 1/3*f2", "y*f1 - f1", "y*f2 - f2"]
        .into_iter()
        .map(String::from)
        .collect();
    if got != want {
        return fail(format!("G = {got:?}"));
    }
    Ok("O_F = {f1, f2}".into())
}

fn random_oracle(seed: u64, cases: usize) -> Outcome {
    let space = fixtures::space();
    let mut rng = random::rng(seed);
    for case in 0..cases {
        let gens = random::finite_codim_generators(&mut rng, &space, 2);
        let a = module_border_basis(&gens, &space, &MbbaOptions::default()).map_err(|e| format!("case {case}: {e}"))?;
        let b = naive_border_basis(&gens, &space, 64).map_err(|e| format!("case {case}: {e}"))?;
        if a != b {
            return fail(format!("case {case}: algorithms disagree"));
        }
    }
    Ok(format!("{cases} instances agree"))
}

fn random_characterizations(seed: u64, cases: usize) -> Outcome {
    let space = fixtures::space();
    let mut rng = random::rng(seed.wrapping_add(1));
    let mut bases = 0;
    for case in 0..cases {
        let g = match rng.random_range(0..3) {
            0 => {
                let om = random::bounded_order_module(&mut rng, &space, 12, 12);
                random::random_prebasis(&mut rng, om, 0.4)
            }
            1 => random::random_border_basis(&mut rng, &space, 12, 12).map_err(|e| e.to_string())?.1.into_prebasis(),
            _ => {
                let b = random::random_border_basis(&mut rng, &space, 12, 12).map_err(|e| e.to_string())?.1;
                random::perturb(&mut rng, &b)
            }
        };
        let all = buchberger_check(&g, PairMode::AllPairs).is_none();
        let nb = buchberger_check(&g, PairMode::NeighborsOnly).is_none();
        let comm = mult_matrices(&g).commute();
        if all != nb || nb != comm {
            return fail(format!("case {case}: all pairs {all}, neighbors {nb}, matrices {comm}"));
        }
        bases += usize::from(all);
    }
    Ok(format!("{cases} prebases, {bases} border bases"))
}

fn random_division(seed: u64, cases: usize) -> Outcome {
    let space = fixtures::space();
    let mut rng = random::rng(seed.wrapping_add(2));
    for case in 0..cases {
        let (_, g) = random::random_border_basis(&mut rng, &space, 12, 12).map_err(|e| e.to_string())?;
        let v = random::random_vector(&mut rng, &space, 3, 5);
        let d = g.divide(&v).map_err(|e| e.to_string())?;
        let nr = g.from_coords(&d.remainder);
        if &g.combine(&d.quotients) + &nr != v {
            return fail(format!("case {case}: reconstruction fails for {v}"));
        }
    }
    Ok(format!("{cases} divisions reconstruct"))
}

fn random_round_trip(seed: u64, cases: usize) -> Outcome {
    let h = fixtures::header(2);
    let space = h.space();
    let mut rng = random::rng(seed.wrapping_add(3));
    for _ in 0..cases {
        let v = random::random_vector(&mut rng, &space, 3, 5);
        let text = print_vector(&v, &h);
        if parse_vector(&text, &h).as_ref() != Ok(&v) {
            return fail(format!("`{text}` does not parse back"));
        }
    }
    Ok(format!("{cases} vectors"))
}

pub(crate) fn run(seed: u64, cases: usize) -> Report {
    let checks: Vec<(&str, Outcome)> = vec![
        ("golden-division", golden_division()),
        ("golden-witness", golden_witness()),
        ("golden-mbba", golden_mbba()),
        ("golden-quotient", golden_quotient()),
        ("golden-subideal", golden_subideal()),
        ("random-oracle", random_oracle(seed, cases)),
        ("random-characterizations", random_characterizations(seed, cases)),
        ("random-division", random_division(seed, cases)),
        ("random-round-trip", random_round_trip(seed, cases)),
    ];
    let passed = checks.iter().filter(|(_, o)| o.is_ok()).count();
    let mut pretty = String::new();
    let mut items = Vec::new();
    for (name, outcome) in &checks {
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        pretty.push_str(&format!("{tag} {name}: {detail}\n"));
        items.push(json!({ "name": name, "pass": outcome.is_ok(), "detail": detail }));
    }
    pretty.push_str(&format!("{passed} of {} checks passed (seed {seed})\n", checks.len()));
    Report {
        pretty,
        json: json!({ "seed": seed, "checks": items, "passed": passed, "total": checks.len() }),
        code: if passed == checks.len() { EXIT_OK } else { EXIT_SELFTEST },
    }
}
