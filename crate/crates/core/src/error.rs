use alloc::string::String;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An intermediate value left the exactly supported range.
    #[error("magnitude exceeded: {0}")]
    Magnitude(&'static str),
    /// A composite cofactor survived every splitting strategy.
    #[error("could not split composite cofactor {cofactor}")]
    FactorizationFailed {
        /// The unsplit cofactor.
        cofactor: u128,
    },
    /// A documented precondition was violated by the caller.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The quartic is the square of a polynomial, so the curve has infinitely
    /// many integral points.
    #[error("polynomial is a perfect square")]
    PerfectSquare,
    /// A relation that the theory guarantees did not hold. Always a bug.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
