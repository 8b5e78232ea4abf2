use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unsupported field size p={p}, m={m} (need p^m <= 256, 1 <= m <= 8)")]
    UnsupportedSize { p: u32, m: u32 },
    #[error("GF({sub}) is not a subfield of GF({field})")]
    NotSubfield { sub: usize, field: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation requires a field of square order, got GF({0})")]
    WrongFieldOrder(usize),
    #[error("symplectic layout requires even length, got {0}")]
    OddLength(usize),
    #[error("the zero code has no nonzero codeword")]
    ZeroCode,
    #[error("difference set is empty: the two codes are equal")]
    EmptyDifference,
    #[error("codes are not nested: {0}")]
    NotNested(String),
    #[error("not self-orthogonal: generators {i} and {j} pair to {value}")]
    NotSelfOrthogonal { i: usize, j: usize, value: u8 },
    #[error("code does not contain its Euclidean dual")]
    NotDualContaining,
    #[error("second code is not a proper enlargement of the first")]
    NotEnlargement,
    #[error("enlargement too small: need k' > k + 1 (k = {k}, k' = {k_prime})")]
    EnlargementTooSmall { k: usize, k_prime: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("value out of range: {0}")]
    BadRange(String),
    #[error("syntax error: {0}")]
    BadSyntax(String),
    #[error("invalid symbol: {0}")]
    BadAlphabet(String),
    #[error("rule precondition violated: {0}")]
    BadRule(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("only GF(2) is supported here, got GF({0})")]
    UnsupportedField(usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
