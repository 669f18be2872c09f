use thiserror::Error;

/// Error type shared by every numeric routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Root-of-unity and multisection orders must be at least 2.
    #[error("order must be at least 2, got {0}")]
    InvalidOrder(i64),
    /// A component index must satisfy 0 <= k < order.
    #[error("component index {index} out of range for order {order}")]
    IndexOutOfRange { index: i64, order: i64 },
    /// The two-consecutive-small-terms stop was never reached.
    #[error("series did not converge within {max_terms} terms (last term {last_term:.3e})")]
    SeriesTruncation { max_terms: usize, last_term: f64 },
    /// A divisor fell below the pole threshold.
    #[error("pole: divisor magnitude {0:.3e} is below threshold")]
    Pole(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The integrand failed the decay probe at the window edges.
    #[error("integrand has not decayed at the integration window edges")]
    NotDecayed,
    #[error("quadrature did not converge within {0} refinements")]
    QuadratureNoConvergence(u32),
    #[error("dimension {got} is below the minimum {min}")]
    DimensionTooSmall { min: usize, got: usize },
    /// An intermediate value overflowed or turned into NaN.
    #[error("computation produced a non-finite value")]
    NonFinite,
    #[error("I/O: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
