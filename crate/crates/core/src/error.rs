use thiserror::Error;

use crate::rings::RingTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingTag, RingTag),

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{0} is divisible by the ramified prime and has no primary associate")]
    NoPrimaryAssociate(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("modulus not prime: {0}")]
    ModulusNotPrime(String),

    #[error("ramified modulus unsupported: {0}")]
    RamifiedModulus(String),

    #[error("zero has no inverse")]
    ZeroInverse,

    #[error("not a root-of-unity residue")]
    NotRootOfUnityResidue,

    #[error("character does not exist: order {m} does not divide {p}-1")]
    CharacterDoesNotExist { p: u64, m: u32 },

    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("bound exceeded: {what} needs {size}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        size: String,
        bound: u64,
    },

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Resource-bound errors are reported separately from domain errors
    /// by the command line front end.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
