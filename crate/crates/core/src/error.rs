use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime (got {0})")]
    InvalidPrime(u64),
    #[error("size limit exceeded: {what} = {value} exceeds the budget of {limit}")]
    SizeLimit {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation is undefined in characteristic 2")]
    CharacteristicTwo,
    #[error("cyclotomic integers of different orders ({0} and {1})")]
    MixedCyclotomicOrder(u32, u32),
    #[error("quadratic coefficient must be nonzero")]
    DegenerateQuadratic,
    #[error("duplicate evaluation point {0}")]
    DuplicateEvaluationPoint(u32),
    #[error("element code {code} is outside the field of order {q}")]
    ElementOutOfRange { code: u64, q: u32 },
    #[error("message has {got} coefficients, code dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("coefficient {0} cannot be halved exactly")]
    NonIntegralCoefficient(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
