use thiserror::Error;

/// Errors raised by the semigroup operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("generators have gcd {0}, expected 1 (use normalize() to divide it out)")]
    GcdNotOne(u64),
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(u64),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("ordering is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error("multipliers {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("multiplier d{which} = {value} does not lie in the partner semigroup")]
    MultiplierNotInPartner { which: u8, value: u64 },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not of L-space shape: {0}")]
    NotLSpaceShape(String),
    #[error("p(t)/(1-t) is not the indicator series of a set (partial sum {sum} at degree {degree})")]
    QuotientNotIndicator { degree: usize, sum: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable variant name, for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotAnElement(_) => "NotAnElement",
            Error::ZeroArgument => "ZeroArgument",
            Error::NotAPermutation => "NotAPermutation",
            Error::NotCoprime(..) => "NotCoprime",
            Error::MultiplierNotInPartner { .. } => "MultiplierNotInPartner",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotLSpaceShape(_) => "NotLSpaceShape",
            Error::QuotientNotIndicator { .. } => "QuotientNotIndicator",
            Error::Parse(_) => "Parse",
            Error::InternalInconsistency(_) => "InternalInconsistency",
        }
    }
}
