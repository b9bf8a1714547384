use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "polynomial evaluation overflowed to a non-finite value; evaluate in root form or rescale"
    )]
    EvaluationOverflow,

    #[error(
        "coefficient expansion overflowed (degree {degree}); use root-form evaluation instead"
    )]
    CoefficientOverflow { degree: usize },

    #[error("degree {degree} exceeds the supported maximum of {max}")]
    UnsupportedDegree { degree: usize, max: usize },

    #[error("affine substitution requires a nonzero scale factor")]
    InvalidSubstitution,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("point lies on an atom of the measure (distance {distance:e})")]
    Pole { distance: f64 },

    #[error("unsupported exponent p = {p}; must satisfy 1 <= p < 2")]
    UnsupportedExponent { p: f64 },

    #[error("radius {radius} lies within {clearance:e} of an outer root modulus")]
    DegenerateRadius { radius: f64, clearance: f64 },

    #[error("outer root at distance {distance} from the domain is not beyond eps = {eps}")]
    AnalyticityViolated { distance: f64, eps: f64 },

    #[error("a zero of the polynomial lies within {clearance:e} of the counting contour")]
    ContourTooClose { clearance: f64 },

    #[error("winding number {value} is not within {tolerance:e} of an integer")]
    NonIntegerWinding { value: f64, tolerance: f64 },

    #[error("invalid outlier shell: {0}")]
    InvalidShell(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
