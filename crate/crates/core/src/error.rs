use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} out of range (1..=32)")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} is not a degree-{n} polynomial with constant term 1")]
    MalformedModulus { n: u32, modulus: u64 },
    #[error("modulus {modulus:#x} is reducible over GF(2)")]
    ReducibleModulus { modulus: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("bit pattern {bits:#x} does not fit in GF(2^{n})")]
    ElementOutOfRange { n: u32, bits: u64 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero raised to a non-positive power")]
    ZeroPower,
    #[error("{d} does not divide {n}")]
    NotADivisor { d: u32, n: u32 },
    #[error("operation requires an even extension degree, got {0}")]
    OddDegree(u32),
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("element does not lie in the subfield GF(2^{0})")]
    NotInSubfield(u32),
    #[error("basis is linearly dependent over GF(2)")]
    DependentBasis,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("both operands are zero")]
    BothZero,
    #[error("degree {degree} must be below {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("{what} requires n <= {max}, got {n}")]
    TooLarge { what: &'static str, n: u32, max: u32 },
    #[error("parameter a is a cube")]
    CubeParameter,
    #[error("index {0} is not in T")]
    NotInT(u32),
    #[error("exponent numerator is not divisible by 3")]
    NonDivisibleExponent,
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("polynomial degree exceeds the supported bound")]
    PolyOverflow,
}
