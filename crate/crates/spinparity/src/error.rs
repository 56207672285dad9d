use thiserror::Error;

/// Errors shared by all modules of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// An argument was outside its domain (wrong sign, wrong parity, not prime, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An input exceeded a documented size bound. Inputs are rejected rather
    /// than silently wrapped.
    #[error("{what} = {value} exceeds the supported bound {bound}")]
    Capacity {
        what: &'static str,
        value: i128,
        bound: i128,
    },

    /// A stated precondition of a counting formula was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    /// An error raised while evaluating one (k, n) check of a sweep.
    #[error("sweep check at k = {k}, n = {n} failed: {source}")]
    SweepCheck {
        k: i64,
        n: i64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wrap an error with the (k, n) pair of the sweep check that raised it.
    pub(crate) fn at_check(k: i64, n: i64, source: Error) -> Self {
        Error::SweepCheck {
            k,
            n,
            source: Box::new(source),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
