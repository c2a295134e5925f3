use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Requested a generator name that is not registered.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    /// A generator callback violated a construction invariant.
    #[error("invalid generator `{name}`: {reason}")]
    InvalidGenerator { name: String, reason: String },

    /// Offset normalization needs a two-sided derivative at t = 1.
    #[error("generator `{name}` has no two-sided derivative at 1; cannot normalize offset")]
    NotDifferentiableAtOne { name: String },

    /// A probability vector failed validation.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// P is not absolutely continuous with respect to Q (or vice versa)
    /// where the operation requires it.
    #[error("absolute continuity violated: {0}")]
    AbsoluteContinuity(String),

    /// The denominator generator is not positive away from 1, so the
    /// ratio f/g is not defined there.
    #[error("domination hypothesis violated: g({t}) = {value} is not positive")]
    DominationHypothesis { t: f64, value: f64 },

    /// kappa(t) is only defined on (0,1) ∪ (1,∞).
    #[error("t = {0} is outside the domain (0,1) ∪ (1,∞) of kappa")]
    KappaDomain(f64),

    /// An iterative numerical procedure failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// An extended-real operation would have produced NaN.
    #[error("undefined extended-real operation: {0}")]
    UndefinedOperation(String),

    /// Every restart of a search collapsed onto a degenerate pair.
    #[error("search failed: {0}")]
    SearchFailure(String),

    /// Input file could not be read or parsed.
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
