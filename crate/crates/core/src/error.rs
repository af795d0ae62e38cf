use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },
    #[error("modulus has degree {found}, expected monic of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("field of order {0} is too large (limit 2^16)")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands belong to different skew polynomial rings")]
    RingMismatch,
    #[error("gcrd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("hermitian conjugation needs an even extension degree, got t = {0}")]
    OddExtensionDegree(usize),
    #[error("search space of {needed} candidates exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("{0} does not right-divide the modulus")]
    NotADivisor(String),
    #[error("cofactor identity fails on one side: h*g = x^n - lambda but g*h != x^n - lambda")]
    TwoSidedMismatch,
    #[error("lambda^2 != 1, the gcrd criterion does not apply")]
    LambdaNotInvolutive,
    #[error("length {n} is not a multiple of the automorphism order {order}")]
    LengthNotMultipleOfOrder { n: usize, order: usize },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("scaling element must be a unit")]
    NonUnitDelta,
    #[error("ring element is not a unit")]
    NonUnit,
    #[error("unsupported census variant: {0}")]
    UnsupportedVariant(String),
    #[error("lambda = 1 - 2v collapses to 1 in characteristic 2")]
    CharacteristicTwoWithOneMinusTwoV,
    #[error("count overflowed 128 bits")]
    CountOverflow,
    #[error("{criterion} disagrees: {detail}")]
    CriterionDisagreement {
        criterion: &'static str,
        detail: String,
    },
    #[error("parse error in {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("row mismatch in {table}: expected {expected}, computed {computed}")]
    RowMismatch {
        table: String,
        expected: String,
        computed: String,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
