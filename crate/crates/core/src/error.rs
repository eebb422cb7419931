use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one generator")]
    EmptyAlphabet,
    #[error("generator name {0:?} is not valid")]
    InvalidGenerator(String),
    #[error("generator {0:?} appears more than once")]
    DuplicateGenerator(String),
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("truncation length must be at least 1")]
    ZeroLength,
    #[error("expected {expected} components, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands use different Witt contexts")]
    ContextMismatch,
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("coefficient {coefficient} of [{class}] is not divisible by {divisor}")]
    NotDivisible {
        class: String,
        coefficient: BigInt,
        divisor: BigInt,
    },
    #[error("entry {index} is not a sum of commutators: {value}")]
    EpsilonNotCommutator { index: usize, value: String },
    #[error("Verschiebung exponent m = {m} exceeds n = {n}")]
    ShiftOrder { m: usize, n: usize },
    #[error("commutator generator needs at least one factor on each side")]
    EmptyFactors,
    #[error("unsupported setting: {0}")]
    Unsupported(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
