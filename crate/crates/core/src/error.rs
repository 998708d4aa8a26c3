use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `lo >= hi` for a bound pair.
    #[error("degenerate or reversed interval [{lo}, {hi}]: lower bound must be strictly below upper bound")]
    DegenerateInterval { lo: String, hi: String },

    #[error("half-length must be strictly positive, got {0}")]
    NonPositiveHalfLength(String),

    #[error("cannot parse {input:?} as an exact rational: {reason}")]
    ParseScalar { input: String, reason: String },

    #[error("invalid domain description: {0}")]
    InvalidDomain(String),

    #[error("domain is not canonical: {0}")]
    NotCanonical(String),

    /// The nonnegative-bound formula needs `c_i >= l_i` for every variable.
    #[error("nonnegative-bound formula requires c_i >= l_i, violated for variable {index}")]
    NegativeLowerBound { index: usize },
}
