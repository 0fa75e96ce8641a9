//! Exact module border bases over `Q[x_1..x_n]^r`.

pub mod charsuite;
pub mod error;
pub mod exactla;
pub mod fixtures;
pub mod groebner;
pub mod input;
pub mod mbba;
pub mod ordstruct;
pub mod par;
pub mod prebasis;
pub mod quotient;
pub mod random;
pub mod ring;
pub mod subideal;

pub use error::{Error, Result};
