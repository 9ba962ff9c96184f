//! Error type shared by the whole crate.
//!
//! Errors fall into two classes that the CLI maps onto exit codes: *usage*
//! errors (malformed input, unsupported parameters, exit code 2) and *domain*
//! errors (structurally valid input outside an operation's mathematical
//! precondition, exit code 1).

use crate::weight::Weight;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root-system factor `{0}`: supported factors are A(n>=1), B(n>=2), C(n>=2), D(n>=3), E6, E7, E8, F4, G2")]
    InvalidFactor(String),

    #[error("cannot parse root-system spec `{0}`: expected factors like `A2` or `B3xA1`")]
    ParseType(String),

    #[error("cannot parse Levi spec `{0}`: expected `none` or comma-separated 1-based indices")]
    ParseLevi(String),

    #[error("cannot parse weight `{0}`: expected comma-separated integers like `1,0,-2`")]
    ParseWeight(String),

    #[error("cannot parse JSON report: {0}")]
    ParseJson(String),

    #[error("Levi index {index} out of range 1..={rank}")]
    LeviIndexOutOfRange { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("characteristic must be at least 2, got {0}")]
    CharacteristicTooSmall(u64),

    #[error("{0} is not prime; pass the composite override to explore non-prime characteristics")]
    NotPrime(u64),

    #[error("Frobenius power r must be at least 1")]
    ZeroFrobeniusPower,

    #[error("p^r = {p}^{r} exceeds the supported machine range")]
    PowerOverflow { p: u64, r: u32 },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {weight} is not in X(P): coordinate {index} (1-based) is nonzero on the Levi subset")]
    NotInXP { weight: Weight, index: usize },

    #[error(
        "weight {weight} violates the hypothesis 0 <= <mu, alpha^vee> <= p^r - 1 = {bound}: \
         coordinate {index} (1-based) is {value}; the multiplicity is not determined here"
    )]
    OutsideRestrictedRange {
        weight: Weight,
        index: usize,
        value: i64,
        bound: i64,
    },
}

impl Error {
    /// True for malformed-input errors (CLI exit code 2); false for domain
    /// errors, i.e. well-formed input outside a mathematical precondition
    /// (CLI exit code 1).
    pub fn is_usage(&self) -> bool {
        match self {
            Error::InvalidFactor(_)
            | Error::ParseType(_)
            | Error::ParseLevi(_)
            | Error::ParseWeight(_)
            | Error::ParseJson(_)
            | Error::LeviIndexOutOfRange { .. }
            | Error::DimensionMismatch { .. }
            | Error::CharacteristicTooSmall(_)
            | Error::NotPrime(_)
            | Error::ZeroFrobeniusPower
            | Error::PowerOverflow { .. } => true,
            Error::NotDominant(_)
            | Error::NotInXP { .. }
            | Error::OutsideRestrictedRange { .. } => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
