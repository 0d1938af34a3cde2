use thiserror::Error;

use crate::algebra::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symplectic algebras need an even defining dimension, got n = {0}")]
    SymplecticOddDimension(usize),
    #[error("{family} with n = {n} is below the smallest supported dimension {min}")]
    DimensionTooSmall {
        family: Family,
        n: usize,
        min: usize,
    },
    #[error("n = {n} exceeds the configured cap {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("slot {slot} out of range for rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("index ({row}, {col}) outside a {dim}x{dim} operator")]
    IndexOutOfRange { row: usize, col: usize, dim: usize },
    #[error("slots must differ, got {0} twice")]
    EqualSlots(usize),
    #[error("shape mismatch: (n={lhs_n}, k={lhs_k}) vs (n={rhs_n}, k={rhs_k})")]
    ShapeMismatch {
        lhs_n: usize,
        lhs_k: usize,
        rhs_n: usize,
        rhs_k: usize,
    },
    #[error("epsilon operator needs an even rank, got r = {0}")]
    OddR(usize),
    #[error("Killing form degenerates for this algebra (N - 2eps = 0)")]
    DegenerateKilling,
    #[error("({i}, {j}) is not a generator label for {algebra}")]
    InvalidGeneratorLabel { algebra: String, i: usize, j: usize },
    #[error("identity `{0}` does not hold")]
    IdentityViolation(String),
    #[error("M = 8 has a degenerate root pair; use the so(8) system")]
    NeedsSo8Refinement,
    #[error("operation requires so(8), got {0}")]
    WrongAlgebra(String),
    #[error("trace of {label} is {value}, not a non-negative integer")]
    NonIntegerTrace { label: String, value: String },
    #[error("Vogel point has a vanishing denominator: {0}")]
    DegenerateVogelPoint(String),
    #[error("no Vogel correspondence for {0}")]
    UnsupportedFamily(String),
    #[error("no projector labelled `{0}` in this system")]
    UnknownProjector(String),
    #[error("polynomial of degree {degree} needs powers beyond the {max} computed")]
    DegreeTooHigh { degree: usize, max: usize },
    #[error("malformed sparse operator at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
