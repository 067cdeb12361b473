use thiserror::Error;

/// Errors raised by the structural and numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CrError {
    #[error("incompatible shapes: {0}")]
    IncompatibleShapes(String),
    #[error("matrix outside the ambient algebra: {0}")]
    NotInAmbient(String),
    #[error("not closed under the bracket: [{a}, {b}] = {bracket} is outside the span")]
    NotClosed { a: String, b: String, bracket: String },
    #[error("irrational weights: {0}")]
    IrrationalWeights(String),
    #[error("not splittable: {0}")]
    NotSplittable(String),
    #[error("not nilpotent: {0}")]
    NotNilpotent(String),
    #[error("P0 membership failed: {0}")]
    P0MembershipFailed(String),
    #[error("weight ascent stalled: {0}")]
    WeightAscentStalled(String),
    #[error("maximality certificate failed: {0}")]
    MaximalityCertificateFailed(String),
    #[error("empty characteristic space")]
    EmptyCharacteristicSpace,
    #[error("point not in f0: {0}")]
    NotInF0(String),
    #[error("not Hermitian positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("ill-conditioned: condition number {0:e}")]
    IllConditioned(f64),
    #[error("cross-check divergence: {0}")]
    CrossCheckDivergence(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),
    #[error("no root found: {0}")]
    NoRootFound(String),
    #[error("non-convergence: {0}")]
    NonConvergence(String),
    #[error("restart disagreement: {0}")]
    RestartDisagreement(String),
    #[error("noise dominated: {0}")]
    NoiseDominated(String),
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, CrError>;
