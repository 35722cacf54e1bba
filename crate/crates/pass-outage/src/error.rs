use std::fmt;

/// Errors reported by the analysis modules.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter that must be strictly positive was not.
    NonPositive { name: &'static str, value: f64 },
    /// A parameter that must be finite was NaN or infinite.
    NonFinite { name: &'static str },
    /// The path-loss exponent must be at least 2.
    PathlossExponentTooSmall { value: f64 },
    /// A quadrature rule needs at least one node.
    ZeroQuadratureOrder,
    /// Integration bounds with `a > b`.
    InvertedInterval { a: f64, b: f64 },
    /// The integrand returned a non-finite value at a quadrature node.
    NonFiniteIntegrand { at: f64 },
    /// A NOMA-only operation was called with an OMA scheme (or vice versa).
    ModeMismatch { expected: &'static str },
    /// NOMA power split must satisfy `near < far` with `near + far = 1`.
    UnorderedPowerSplit { near: f64 },
    /// `far - near * (2^rate - 1) <= 0`: the far user is in outage at any SNR.
    InfeasiblePowerSplit { near: f64, target_rate_bps_hz: f64 },
    /// Monte-Carlo runs need at least one trial and a nonzero batch size.
    ZeroTrials,
    /// A sweep was asked to cover an empty set of systems, schemes or users.
    EmptySelection { what: &'static str },
    /// A log-log slope is undefined because the outage probability is zero
    /// at one of the probe points.
    ZeroOutageInSlope { rho_db: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive { name, value } => {
                write!(f, "{name} must be positive, got {value}")
            }
            Error::NonFinite { name } => write!(f, "{name} must be finite"),
            Error::PathlossExponentTooSmall { value } => {
                write!(f, "path-loss exponent must be >= 2, got {value}")
            }
            Error::ZeroQuadratureOrder => write!(f, "quadrature order must be >= 1"),
            Error::InvertedInterval { a, b } => {
                write!(f, "integration interval [{a}, {b}] has a > b")
            }
            Error::NonFiniteIntegrand { at } => {
                write!(f, "integrand is not finite at z = {at}")
            }
            Error::ModeMismatch { expected } => {
                write!(f, "operation requires a {expected} access scheme")
            }
            Error::UnorderedPowerSplit { near } => {
                write!(
                    f,
                    "near-user power fraction must lie in (0, 0.5), got {near}"
                )
            }
            Error::InfeasiblePowerSplit {
                near,
                target_rate_bps_hz,
            } => {
                write!(
                    f,
                    "power split near={near} cannot support target rate \
                     {target_rate_bps_hz} b/s/Hz: far-user outage is certain at all SNR"
                )
            }
            Error::ZeroTrials => write!(f, "trials and batch size must be >= 1"),
            Error::EmptySelection { what } => {
                write!(f, "selection of {what} must not be empty")
            }
            Error::ZeroOutageInSlope { rho_db } => {
                write!(
                    f,
                    "outage probability is zero at {rho_db} dB; slope undefined"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
