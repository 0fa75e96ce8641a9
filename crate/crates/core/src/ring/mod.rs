//! Terms, orderings and exact polynomial arithmetic in `Q[x_1..x_n]^r`.

mod order;
mod poly;
mod rat;
mod term;
mod vecp;

pub use order::{BaseOrder, ModuleExtension, TermOrder};
pub use poly::Poly;
pub use rat::{int, one, parse_rat, rat, zero, Rat};
pub use term::{default_var_names, terms_of_degree, terms_up_to_degree, ModuleTerm, Term};
pub use vecp::VecP;
pub(crate) use poly::write_sum;

/// The free module `Q[x_1..x_n]^r` together with its term ordering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FreeModule {
    pub nvars: usize,
    pub rank: usize,
    pub order: TermOrder,
}

impl FreeModule {
    pub fn new(nvars: usize, rank: usize, order: TermOrder) -> Self {
        FreeModule { nvars, rank, order }
    }

    pub fn zero(&self) -> VecP {
        VecP::zero(self.nvars, self.rank)
    }

    pub fn unit(&self, k: usize) -> VecP {
        VecP::unit(self.nvars, self.rank, k)
    }

    /// All module terms of degree at most `d`, in descending order.
    pub fn terms_up_to_degree(&self, d: u32) -> Vec<ModuleTerm> {
        let mut out: Vec<ModuleTerm> = terms_up_to_degree(self.nvars, d)
            .into_iter()
            .flat_map(|t| (0..self.rank).map(move |k| ModuleTerm::new(t.clone(), k)))
            .collect();
        self.order.sort_desc(&mut out);
        out
    }
}
