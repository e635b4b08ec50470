use thiserror::Error;

/// Errors produced by the combinatorial routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A multiset has a zero multiplicity below its largest letter where full support is required.
    #[error("malformed multiset: {0}")]
    MalformedMultiset(String),

    /// Two lengths that must agree do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A numeric parameter is out of its legal range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A word was expected to encode a set partition but its tail permutation is not increasing.
    #[error("not a Mahonian word: {0}")]
    NotMahonian(String),

    /// Text could not be parsed into the requested value.
    #[error("parse error: {0}")]
    Parse(String),

    /// The statistic name is unknown or deliberately not implemented.
    #[error("unsupported statistic: {0}")]
    UnsupportedStatistic(String),

    /// The bijection name is unknown.
    #[error("unknown bijection: {0}")]
    UnknownBijection(String),

    /// A precondition of a verification routine was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Polynomial division left a nonzero remainder.
    #[error("inexact polynomial division")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
