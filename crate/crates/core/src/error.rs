use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("coefficient of x^{index} has negative valuation")]
    NegativeValuation { index: usize },

    #[error("polynomial must be nonconstant with nonzero constant term")]
    ZeroEndCoefficient,

    #[error("polynomial of degree {found} given where degree >= {required} is required")]
    Degree { required: usize, found: String },

    #[error(
        "iteration budget exceeded at iterate {iterate} (degree {degree}, {bits} coefficient bits)"
    )]
    BudgetExceeded {
        iterate: u32,
        degree: u64,
        bits: u64,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{value} is not a unit modulo {prime}")]
    NotAUnit { value: String, prime: u64 },

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u64, cap: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no good reduction prime found below {0}")]
    NoGoodPrime(u64),
}

impl Error {
    pub(crate) fn degree(required: usize, found: Option<usize>) -> Error {
        Error::Degree {
            required,
            found: found.map_or_else(|| "-inf".to_string(), |d| d.to_string()),
        }
    }

    /// Stable snake_case name of the variant, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::NotPrime(_) => "not_prime",
            Error::NegativeValuation { .. } => "negative_valuation",
            Error::ZeroEndCoefficient => "zero_end_coefficient",
            Error::Degree { .. } => "degree",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::NotAUnit { .. } => "not_a_unit",
            Error::HypothesisFailed(_) => "hypothesis_failed",
            Error::DegreeCap { .. } => "degree_cap",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::NoGoodPrime(_) => "no_good_prime",
        }
    }
}
