#![allow(dead_code)]

use modbb::random::{self, InstanceRng};
use modbb::ring::{BaseOrder, FreeModule, TermOrder};

pub fn space(rank: usize) -> FreeModule {
    FreeModule::new(2, rank, TermOrder::default())
}

pub fn space_with(base: BaseOrder, rank: usize) -> FreeModule {
    FreeModule::new(2, rank, TermOrder::new(base))
}

pub fn rng(seed: u64) -> InstanceRng {
    random::rng(seed)
}

pub const BASES: [BaseOrder; 3] = [BaseOrder::DegRevLex, BaseOrder::DegLex, BaseOrder::Lex];
