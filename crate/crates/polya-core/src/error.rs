use thiserror::Error;

/// Errors surfaced by the numeric, root-finding and analytic layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("could not parse '{text}' as a decimal number")]
    ParseNumber { text: String },

    #[error("evaluation hit a pole or a zero of the denominator at {at}")]
    PoleEncountered { at: String },

    #[error("evaluation at a zero of the cofactor (n = {n})")]
    CofactorZero { n: usize },

    #[error("coefficient magnitude exceeded the representable range")]
    PrecisionExhausted,

    #[error("root finding did not converge after {iterations} iterations")]
    RootsDidNotConverge {
        iterations: u32,
        /// Best iterate at the point of failure, for diagnostics.
        best: crate::roots::ZeroSet,
    },

    #[error("quadrature did not reach tolerance within {max_points} points")]
    QuadratureDidNotConverge { max_points: u32 },

    #[error("no bracket found for the rescaling radius below r = {ceiling}")]
    NoBracket { ceiling: f64 },

    #[error("branch tracking failed: the path from i passes too close to a zero of S")]
    BranchTrackingFailed,

    #[error("grid point {at} is not in the open upper half-plane")]
    NotInUpperHalfPlane { at: String },

    #[error("point {at} lies outside the Stolz region of the diagnostics")]
    OutsideStolzRegion { at: String },

    #[error("function is not Herglotz: recovered mass {mass} at t = {location} is not positive")]
    NotHerglotz { location: String, mass: String },

    #[error("pole structure not admissible: {0}")]
    BadPoles(String),

    #[error("degree condition violated: {0}")]
    DegreeMismatch(String),

    #[error("no root of h' found in the interval ({lo}, {hi})")]
    RolleRootMissing { lo: String, hi: String },

    #[error("factorization residual {residual} exceeds tolerance (construction bug)")]
    RemainderTooLarge { residual: String },
}

pub type Result<T> = std::result::Result<T, Error>;
