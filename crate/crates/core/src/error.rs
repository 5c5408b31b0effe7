use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    /// Exact division left a remainder. Inside determinant elimination this
    /// means a kernel bug.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("cannot substitute into negative powers of {symbol} with a non-monomial value")]
    NegativeExponentSubstitution { symbol: String },

    #[error("polynomial is not univariate in q: {0}")]
    NotUnivariate(String),

    #[error("{what}: requested {requested}, limit {limit}")]
    CostGuardExceeded {
        what: String,
        requested: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("index {index} beyond sequence bound {bound}")]
    IndexBeyondBound { index: usize, bound: usize },

    #[error("expected a polynomial, found negative exponents: {0}")]
    NotPolynomial(String),

    #[error("series does not terminate: first numerator parameter must be q^-n")]
    NonTerminating,

    #[error("division failure in terminating series: {0}")]
    DivisionFailure(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
