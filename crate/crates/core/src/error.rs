use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("malformed rational {0:?}: expected `p`, `-p`, `p/q` or `-p/q`")]
    Parse(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("generators {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("semigroup is all of ℕ (a generator equals 1)")]
    WholeSemigroup,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
