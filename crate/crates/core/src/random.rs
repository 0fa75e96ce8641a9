//! Seeded random instances: vectors, finite-codimension generator sets,
//! order modules and prebases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::mbba::{module_border_basis, MbbaOptions};
use crate::ordstruct::OrderModule;
use crate::prebasis::{BorderBasis, Prebasis};
use crate::exactla::RatMatrix;
use crate::ring::{rat, terms_of_degree, terms_up_to_degree, FreeModule, ModuleTerm, Poly, Rat, Term, VecP};

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational with numerator in `-5..=5` and denominator in `1..=3`.
pub fn small_rat(rng: &mut impl Rng) -> Rat {
    let n = loop {
        let n: i64 = rng.random_range(-5..=5);
        if n != 0 {
            break n;
        }
    };
    rat(n, rng.random_range(1..=3))
}

fn pick<'a, T>(rng: &mut impl Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.random_range(0..xs.len())]
}

pub fn random_term(rng: &mut impl Rng, nvars: usize, max_deg: u32) -> Term {
    pick(rng, &terms_up_to_degree(nvars, max_deg)).clone()
}

/// Up to `max_terms` terms of degree at most `max_deg`; may be zero.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, max_deg: u32, max_terms: usize) -> Poly {
    let pool = terms_up_to_degree(nvars, max_deg);
    let mut p = Poly::zero(nvars);
    for _ in 0..rng.random_range(0..=max_terms) {
        p.add_term(pick(rng, &pool).clone(), small_rat(rng));
    }
    p
}

/// Up to `max_terms` module terms of degree at most `max_deg`; may be zero.
pub fn random_vector(rng: &mut impl Rng, space: &FreeModule, max_deg: u32, max_terms: usize) -> VecP {
    let pool = terms_up_to_degree(space.nvars, max_deg);
    let mut v = space.zero();
    if space.rank == 0 {
        return v;
    }
    for _ in 0..rng.random_range(0..=max_terms) {
        let k = rng.random_range(0..space.rank);
        v.add_term(ModuleTerm::new(pick(rng, &pool).clone(), k), small_rat(rng));
    }
    v
}

/// Generators of a submodule of finite codimension with degrees at most
/// `max_deg`: for every component and variable a pure power `x_s^a e_k`
/// plus a sparse tail of lower degree, then at most one further vector
/// whose terms of top degree are not pure powers.
pub fn finite_codim_generators(rng: &mut impl Rng, space: &FreeModule, max_deg: u32) -> Vec<VecP> {
    let max_deg = max_deg.max(1);
    let mut gens = Vec::new();
    for k in 0..space.rank {
        for s in 0..space.nvars {
            let a = if rng.random_bool(0.8) { max_deg } else { rng.random_range(1..=max_deg) };
            let mut exps = vec![0; space.nvars];
            exps[s] = a;
            let mut g = random_vector(rng, space, a - 1, 2);
            g.add_term(ModuleTerm::new(Term::new(exps), k), Rat::from_integer(1.into()));
            gens.push(g);
        }
    }
    if space.rank > 0 && rng.random_bool(0.5) {
        let mixed: Vec<Term> =
            terms_of_degree(space.nvars, max_deg).into_iter().filter(|t| t.exponents().iter().filter(|&&e| e > 0).count() > 1).collect();
        if !mixed.is_empty() {
            let mut g = random_vector(rng, space, max_deg - 1, 3);
            let k = rng.random_range(0..space.rank);
            g.add_term(ModuleTerm::new(pick(rng, &mixed).clone(), k), small_rat(rng));
            gens.push(g);
        }
    }
    gens
}

/// A random order module: each ideal is empty or the divisor closure of
/// one to three terms of degree at most `max_deg`.
pub fn random_order_module(rng: &mut impl Rng, space: &FreeModule, max_deg: u32) -> OrderModule {
    let all = terms_up_to_degree(space.nvars, max_deg);
    let ideals = (0..space.rank)
        .map(|_| {
            if rng.random_bool(0.15) {
                return Vec::new();
            }
            let tops: Vec<Term> = (0..rng.random_range(1..=3)).map(|_| pick(rng, &all).clone()).collect();
            all.iter().filter(|t| tops.iter().any(|u| t.divides(u))).cloned().collect()
        })
        .collect();
    OrderModule::from_ideals(space.nvars, space.order, ideals).expect("divisor closures are order ideals")
}

/// A random order module with `μ ≤ max_mu` and `ν ≤ max_nu`.
pub fn bounded_order_module(rng: &mut impl Rng, space: &FreeModule, max_mu: usize, max_nu: usize) -> OrderModule {
    loop {
        let om = random_order_module(rng, space, 2);
        if om.mu() <= max_mu && om.nu() <= max_nu {
            return om;
        }
    }
}

/// A prebasis over `om` whose coefficients are nonzero with probability `density`.
pub fn random_prebasis(rng: &mut impl Rng, om: OrderModule, density: f64) -> Prebasis {
    let mut c = RatMatrix::zeros(om.mu(), om.nu());
    for i in 0..om.mu() {
        for j in 0..om.nu() {
            if rng.random_bool(density) {
                c[(i, j)] = small_rat(rng);
            }
        }
    }
    Prebasis::new(om, c).expect("shape matches")
}

/// `g` with one coefficient changed, or `g` itself if `μ ν = 0`.
pub fn perturb(rng: &mut impl Rng, g: &Prebasis) -> Prebasis {
    let (mu, nu) = (g.mu(), g.nu());
    let mut c = g.coeffs().clone();
    if mu > 0 && nu > 0 {
        let (i, j) = (rng.random_range(0..mu), rng.random_range(0..nu));
        c[(i, j)] = &c[(i, j)] + &small_rat(rng);
    }
    Prebasis::new(g.order_module().clone(), c).expect("shape matches")
}

/// The border basis of a random finite-codimension submodule with
/// `μ ≤ max_mu` and `ν ≤ max_nu`, together with its generators.
pub fn random_border_basis(
    rng: &mut impl Rng,
    space: &FreeModule,
    max_mu: usize,
    max_nu: usize,
) -> Result<(Vec<VecP>, BorderBasis)> {
    loop {
        let gens = finite_codim_generators(rng, space, 2);
        let bb = module_border_basis(&gens, space, &MbbaOptions::default())?;
        if bb.mu() <= max_mu && bb.nu() <= max_nu {
            return Ok((gens, bb));
        }
    }
}

/// A random module term of degree exactly `d`.
pub fn random_module_term(rng: &mut impl Rng, space: &FreeModule, d: u32) -> ModuleTerm {
    let t = pick(rng, &terms_of_degree(space.nvars, d)).clone();
    ModuleTerm::new(t, rng.random_range(0..space.rank.max(1)))
}
