use crate::Complex;

/// Errors surfaced by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("non-finite coefficient of z^{index}")]
    NonFinite { index: usize },

    #[error("monomial exponent {m} outside 1..={degree}")]
    MonomialDegree { m: usize, degree: usize },

    #[error("leading coefficient must be 1, got {a1}")]
    LeadingCoefficient { a1: Complex },

    #[error("slice parameter must have modulus 1, got {modulus}")]
    EpsilonNotUnit { modulus: f64 },

    #[error("the angular derivative is undefined at z = 0")]
    OriginExcluded,

    #[error("class parameter lambda must lie in (0, 1], got {lambda}")]
    InvalidLambda { lambda: f64 },

    #[error("lambda = {lambda} < 1 requires the pinned subclass (g'(0) = 0)")]
    PinnedRequired { lambda: f64 },

    #[error("extremal index {m} outside 2..={degree}")]
    ExtremalIndex { m: usize, degree: usize },

    #[error("invalid disk grid: {reason}")]
    InvalidGrid { reason: &'static str },

    #[error("{got} boundary samples given, at least {min} required")]
    TooFewAngles { got: usize, min: usize },

    #[error("functional degenerate at z = {z} (denominator below 1e-12)")]
    Degenerate { z: Complex },

    #[error("functional degenerate at every sampled point")]
    AllDegenerate,

    #[error("radius tolerance must be at least 1e-4, got {tol}")]
    InvalidTolerance { tol: f64 },

    #[error("product kernel must have leading coefficient 1, got {phi1}")]
    PhiNotNormalized { phi1: Complex },

    #[error("shear parameter must satisfy |alpha| <= 1, got modulus {modulus}")]
    AlphaTooLarge { modulus: f64 },

    #[error("invalid convex-combination weights: {reason}")]
    InvalidWeights { reason: &'static str },
}
