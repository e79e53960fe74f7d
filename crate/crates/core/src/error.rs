//! Error type shared by every operation in the crate.

use crate::params::Regime;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A non-finite or otherwise unusable input.
    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },

    /// A recurrence or relation denominator factor is too close to zero for
    /// the requested parameters; the quantity is undefined there.
    #[error("degenerate parameters: |{guard}| = {value:e} below the denominator floor")]
    DegenerateParameters { guard: String, value: f64 },

    /// The operation only applies in a specific parameter regime.
    #[error("regime mismatch: expected {expected}, found {found:?}")]
    RegimeMismatch { expected: &'static str, found: Regime },

    /// Degree outside the range an operation supports.
    #[error("degree n = {n} outside supported range [{min}, {}]", degree_cap(.max))]
    InvalidDegree { n: usize, min: usize, max: usize },

    /// A bracket that theory guarantees to straddle a zero failed to change
    /// sign.  This signals an evaluation bug or a regime violation and is
    /// never retried or repaired.
    #[error("bracket [{lo}, {hi}] has no sign change: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    BracketFailure { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Iteration budget exhausted or a certified residual out of tolerance.
    #[error("convergence failure: {what}")]
    ConvergenceFailure { what: String },

    /// Two computed zeros closer than the separation floor (near-common zero).
    #[error("zero separation failure: {left} and {right} closer than the separation floor")]
    SeparationFailure { left: f64, right: f64 },

    /// The sign-scan oracle found a different number of zeros than expected.
    #[error("oracle failure: expected {expected} zeros, found {found}")]
    OracleFailure { expected: usize, found: usize },

    /// Parameter shift t outside the supported set {1} ∪ [2, 4].
    #[error("unsupported shift t = {t}; supported: t = 1 or 2 <= t <= 4")]
    UnsupportedShift { t: f64 },

    /// Zero lists whose lengths do not fit the requested comparison.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// Render an open-ended degree cap as "unbounded" instead of `usize::MAX`.
fn degree_cap(max: &usize) -> String {
    if *max == usize::MAX {
        "unbounded".to_string()
    } else {
        max.to_string()
    }
}

impl Error {
    pub(crate) fn invalid(what: impl Into<String>) -> Self {
        Error::InvalidParameter { what: what.into() }
    }

    pub(crate) fn degenerate(guard: impl Into<String>, value: f64) -> Self {
        Error::DegenerateParameters { guard: guard.into(), value }
    }
}
