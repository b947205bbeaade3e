use thiserror::Error;

use crate::bits::BitVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: u64, n: usize },

    #[error("variable count {0} outside supported range 1..=24")]
    VariableCount(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("spectrum is not the transform of a Boolean function: unnormalized inverse value {value} at {point}")]
    NotBooleanSpectrum { point: BitVector, value: i64 },

    /// The prescribed dual is not at bent distance to the sequence profile
    /// column of `point`; `distance` is the Hamming distance actually found.
    #[error("not plateaued: dual at distance {distance} from profile column {point}")]
    NotPlateaued { point: BitVector, distance: u64 },

    #[error("function is not plateaued")]
    FunctionNotPlateaued,

    #[error("function is not bent (witness {0})")]
    NotBent(BitVector),

    #[error("point {0} is not in the support")]
    PointNotInSupport(BitVector),

    #[error("support does not match the Walsh support of the function")]
    SupportMismatch,

    #[error("duplicate support rows {0} and {1}")]
    DuplicateRow(usize, usize),

    #[error("map is not bijective: {0}")]
    NotBijective(String),

    #[error("sets overlap at {0}")]
    Overlap(BitVector),

    #[error("alpha is not affine (degree {0})")]
    AlphaNotAffine(usize),

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("dual weight {weight} is not 2^(m-1) +- 2^(m/2-1) for m = {m}")]
    DualWeight { weight: u64, m: usize },

    #[error("odd variable count {0} where an even count is required")]
    OddVariableCount(usize),

    #[error("construction condition violated: {0}")]
    Condition(String),

    #[error("invalid support relation")]
    InvalidRelation,

    #[error("search budget of {0} exceeded")]
    BudgetExceeded(u64),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
