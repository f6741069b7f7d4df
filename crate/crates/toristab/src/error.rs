//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The matrix has determinant zero and induces no dominant rational map.
    #[error("matrix has zero determinant")]
    ZeroDeterminant,

    /// An operation restricted to complex spectra was applied to a matrix
    /// with real eigenvalues.
    #[error("spectrum is not complex (discriminant >= 0)")]
    NotComplexSpectrum,

    /// The zero vector has no direction.
    #[error("zero vector has no direction")]
    ZeroVector,

    /// The rays leave an angular gap of at least pi, so the fan does not
    /// cover the plane.
    #[error("fan is not complete: an angular gap of at least pi remains")]
    NotComplete,

    /// A complete fan needs at least three distinct rays.
    #[error("a complete fan needs at least 3 distinct rays, got {0}")]
    TooFewRays(usize),

    /// No lattice direction lies strictly between the given bounds.
    #[error("no lattice direction strictly between the given bounds")]
    EmptyInterval,

    /// Backward saturation exceeded the configured step budget. The fan
    /// built so far is carried along for inspection.
    #[error("saturation budget exhausted after {steps} line insertions")]
    SaturationBudgetExceeded {
        steps: u64,
        partial: Box<crate::fan::Fan>,
    },

    /// A ray orbit failed to close within the safeguard bound; the matrix
    /// was misclassified as having finite ray action.
    #[error("ray orbit did not close within {0} iterations")]
    OrbitBoundExceeded(u32),

    /// The operation does not apply to this spectral class.
    #[error("operation not applicable to this spectral class")]
    NotApplicable,

    /// An internal invariant was violated; this is a pipeline bug, never a
    /// property of the input.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    /// Malformed input (CLI flags, JSON documents).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
