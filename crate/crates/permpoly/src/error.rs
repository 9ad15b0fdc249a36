use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u32 },
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("modulus must be monic")]
    NotMonic,
    #[error("field order {0} exceeds the supported range (q <= 65536)")]
    FieldTooLarge(u64),
    #[error("element code {code} out of range for F_{q}")]
    ElementOutOfRange { code: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("transposition needs two distinct points")]
    EqualPoints,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("polynomial is constant")]
    ConstantInput,
    #[error("parts sum to {got}, expected {expected}")]
    SumMismatch { expected: u64, got: u64 },
    #[error("degree {degree} exceeds q-2 = {max}")]
    DegreeTooHigh { degree: usize, max: usize },
    #[error("polynomial is not linearized: {0}")]
    NotLinearized(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("characteristic 2 not allowed here")]
    EvenCharacteristic,
    #[error("{m} is not a valid divisor of q-1 = {qm1}")]
    BadDivisor { m: u64, qm1: u64 },
    #[error("polynomial is not a permutation polynomial")]
    NotAPP,
    #[error("polynomial is not normalized")]
    NotNormalized,
    #[error("degree {n} out of range [{lo}, {hi}]")]
    DegreeOutOfRange { n: usize, lo: usize, hi: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("search space {size} exceeds cap {cap}")]
    SearchTooLarge { size: u128, cap: u128 },
    #[error("unknown audit {0:?}")]
    UnknownAudit(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
