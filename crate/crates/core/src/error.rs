use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The presentation parameters violate `1 + |p_1| + ... + |p_{n-1}| < |q|`
    /// or are otherwise malformed.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("reduction did not terminate within {budget} elimination steps")]
    ReductionBudgetExceeded { budget: u64 },
    #[error("digit {digit} outside the alphabet bound {bound}")]
    DigitOutOfRange { digit: i64, bound: u32 },
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("automata have different alphabets")]
    AlphabetMismatch,
    #[error("track {track} out of range for arity {arity}")]
    BadTrack { track: usize, arity: usize },
    #[error("state budget of {limit} states exceeded")]
    StateBudgetExceeded { limit: usize },
    /// A carry machine left its declared bounds; this is an internal fault.
    #[error("carry state {state:?} outside declared bounds")]
    CarryOutOfBounds { state: Vec<i64> },
    #[error("carry cycle without reaching zero")]
    CarryCycle,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0}")]
    Pell(String),
    #[error("matrix is not invertible over the integers")]
    NotInvertible,
    #[error("matrix is not recognizable for these parameters: {0}")]
    NotRecognizable(String),
}
