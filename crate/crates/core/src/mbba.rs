//! The module border basis algorithm.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{intersect_with_coordinate_space, order_module_from_pivots, span_basis, Coords, RatMatrix};
use crate::groebner::{check_finite_codimension, groebner_basis};
use crate::ordstruct::OrderModule;
use crate::prebasis::{BorderBasis, Prebasis};
use crate::ring::{FreeModule, Term, VecP};

pub const DEFAULT_MAX_DEGREE: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MbbaOptions {
    /// Give up once the working degree exceeds this.
    pub max_degree: u32,
    /// Check finiteness of the codimension with a Gröbner basis first.
    pub preflight: bool,
}

impl Default for MbbaOptions {
    fn default() -> Self {
        MbbaOptions { max_degree: DEFAULT_MAX_DEGREE, preflight: false }
    }
}

/// `(V + x_1 V + ... + x_n V) ∩ <L>_K`, iterated until the dimension stops growing.
fn stabilize(mut basis: Vec<VecP>, universe: &[crate::ring::ModuleTerm], space: &FreeModule) -> Vec<VecP> {
    let vars: Vec<Term> = (0..space.nvars).map(|s| Term::var(space.nvars, s)).collect();
    loop {
        let mut grown = basis.clone();
        for v in &basis {
            grown.extend(vars.iter().map(|x| v.mul_term(x)));
        }
        let next = intersect_with_coordinate_space(&grown, universe, &space.order);
        if next.len() == basis.len() {
            return basis;
        }
        basis = next;
    }
}

/// A basis of the smallest `V ⊇ <gens>_K ∩ <L>_K` with
/// `(V + x_1 V + ... + x_n V) ∩ <L>_K = V`, for `L` the terms of degree at most `d`.
pub fn stable_span(gens: &[VecP], space: &FreeModule, d: u32) -> Result<Vec<VecP>> {
    let universe = space.terms_up_to_degree(d);
    let low: Vec<VecP> = gens.iter().filter(|g| g.degree().is_some_and(|e| e <= d)).cloned().collect();
    let basis = span_basis(&low, &universe)?;
    Ok(stabilize(basis, &universe, space))
}

/// The border basis of `<gens>`, together with its order module.
///
/// The ordering must be degree compatible and `<gens>` must have finite
/// codimension; the latter is only detected through `opts.max_degree`
/// unless `opts.preflight` is set.
pub fn module_border_basis(gens: &[VecP], space: &FreeModule, opts: &MbbaOptions) -> Result<BorderBasis> {
    if space.rank == 0 {
        let om = OrderModule::new(space.nvars, space.order, Vec::new())?;
        return Ok(BorderBasis::assume_verified(Prebasis::new(om, RatMatrix::zeros(0, 0))?));
    }
    if !space.order.is_degree_compatible() {
        return Err(Error::NotDegreeCompatible);
    }
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for (i, g) in gens.iter().enumerate() {
        g.check_rank(space.rank)?;
        if g.nvars() != space.nvars {
            return Err(Error::DimensionMismatch { expected: space.nvars, found: g.nvars() });
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
    }
    if opts.preflight {
        check_finite_codimension(&groebner_basis(gens, &space.order), space)?;
    }

    let mut d = gens.iter().filter_map(VecP::degree).max().unwrap_or(0);
    let mut basis: Vec<VecP> = gens.to_vec();
    loop {
        if d > opts.max_degree {
            return Err(Error::DegreeCapExceeded { cap: opts.max_degree });
        }
        let universe = space.terms_up_to_degree(d);
        basis = span_basis(&basis, &universe)?;
        basis = stabilize(basis, &universe, space);

        let coords = Coords::new(universe);
        let (w, pivots) = coords.matrix(&basis)?.rref();
        let om = order_module_from_pivots(space, &coords.terms, &pivots)?;
        if om.border_terms().iter().any(|b| b.degree() > d) {
            d += 1;
            continue;
        }
        // the reduced row with pivot b_j reads b_j + Σ w_i t_i, so c_ij = -w_i
        let mut coeffs = RatMatrix::zeros(om.mu(), om.nu());
        for (j, b) in om.border_terms().iter().enumerate() {
            let col = coords.position(b).expect("border lies in L");
            let row = pivots.iter().position(|&p| p == col).expect("border columns carry pivots");
            for (i, t) in om.terms().iter().enumerate() {
                let a = &w[(row, coords.position(t).expect("M lies in L"))];
                if !a.is_zero() {
                    coeffs[(i, j)] = -a;
                }
            }
        }
        return Ok(BorderBasis::assume_verified(Prebasis::new(om, coeffs)?));
    }
}
