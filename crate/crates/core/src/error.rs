use thiserror::Error;

use crate::ring::{ModuleTerm, Term, VecP};

/// Errors raised by the algebra layer.
///
/// Messages print indices 1-based; the fields themselves are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("rank mismatch: expected rank {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("term {divisor} does not divide {dividend}")]
    NotDivisible { divisor: Term, dividend: Term },

    #[error("operation undefined for the zero vector")]
    ZeroVector,

    #[error("zero generator at position {}", .0 + 1)]
    ZeroGenerator(usize),

    #[error("component e{} out of range for rank {rank}", .component + 1)]
    ComponentOutOfRange { component: usize, rank: usize },

    #[error("not divisor-closed: missing divisor {witness}")]
    NotDivisorClosed { witness: Term },

    #[error("term {0} lies in the order module")]
    InOrderModule(ModuleTerm),

    #[error("term {0} is not in the support")]
    NotInSupport(ModuleTerm),

    #[error("term {term} is not a multiple of border term {border}")]
    NotBorderMultiple { term: ModuleTerm, border: ModuleTerm },

    #[error("index {index} out of range ({len} available)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vector {} is not of the form b - sum c*t over the order module: {reason}", .position + 1)]
    MalformedPrebasis { position: usize, reason: String },

    #[error("coefficient matrix has shape {rows}x{cols}, expected {mu}x{nu}")]
    CoefficientShape { rows: usize, cols: usize, mu: usize, nu: usize },

    #[error("NOT a border basis; witness SV(G{},G{}), NR = {nr}", .i + 1, .j + 1)]
    NotABorderBasis { i: usize, j: usize, nr: VecP },

    #[error("multiplication matrices {} and {} do not commute", .s + 1, .u + 1)]
    NonCommuting { s: usize, u: usize },

    #[error("SV(G{},G{}) has nonzero normal remainder {nr}; no lifting", .i + 1, .j + 1)]
    NoLifting { i: usize, j: usize, nr: VecP },

    #[error("term {0} is outside the coordinate universe")]
    UnsupportedTerm(ModuleTerm),

    #[error("term ordering is not degree compatible")]
    NotDegreeCompatible,

    #[error("input violates the stability hypothesis (V + x1 V + ... + xn V) ∩ <L> = V")]
    NotStable,

    #[error("no generators given for a submodule of nonzero rank")]
    EmptyGenerators,

    #[error("codimension possibly infinite (cap {cap} reached)")]
    DegreeCapExceeded { cap: u32 },

    #[error("codimension is not finite: no pure power of x{} in component e{}", .var + 1, .component + 1)]
    InfiniteCodimension { var: usize, component: usize },

    #[error("no characterizing order module: {first} and {second} coincide modulo S")]
    NoCharacterizingOrderModule { first: ModuleTerm, second: ModuleTerm },

    #[error("border term {0} matches no border class of the quotient prebasis")]
    UnmatchedBorderClass(ModuleTerm),

    #[error("border representatives {first} and {second} lie in the same class modulo S")]
    DuplicateBorderClass { first: ModuleTerm, second: ModuleTerm },

    #[error("parse error at {line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
