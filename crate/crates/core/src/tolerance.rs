//! Numerical tolerances, pinned in one place.
//!
//! These are part of the crate's contract: tests and the acceptance suite
//! assert against exactly these values, so changing one is a semantic change,
//! not a tuning knob.

/// Floor for recurrence/relation denominator factors; below this the
/// parameters are treated as degenerate.
pub const DENOMINATOR: f64 = 1e-9;

/// Relative agreement required between the recurrence and finite-sum
/// evaluation routes.
pub const EVAL_REL: f64 = 1e-9;

/// Upper bound on the normalized residual of every mixed relation.
pub const RESIDUAL_REL: f64 = 1e-8;

/// Tolerance for the finite-difference check of the derivative identity.
pub const FINITE_DIFF: f64 = 1e-5;

/// Certified per-zero residual: |P_n(z)| scaled by the local derivative
/// magnitude must not exceed this.
pub const ROOT: f64 = 1e-12;

/// Minimum separation between two computed zeros of the same polynomial.
pub const SEPARATION: f64 = 1e-10;

/// Default numerical surrogate for polynomial co-primality: no pair of zeros
/// within this distance.
pub const COPRIME: f64 = 1e-9;

/// Width of the |δ − x_{2,n}| band reported as a common-zero boundary rather
/// than a boolean interlacing verdict.
pub const BOUNDARY: f64 = 1e-10;
