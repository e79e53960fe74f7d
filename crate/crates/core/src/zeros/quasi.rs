//! Bracketed-hybrid zero computation for the quasi-orthogonal regime.

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::params::{ParamPair, Regime};
use crate::tolerance;

use super::bounds::bound_chain;
use super::orthogonal::zeros_orthogonal;
use super::refine::refine_zero;
use super::{certify, SolveMethod, ZeroSet};

/// Widest fallback bracket exponent for the outer zero at degree 2.
const MAX_WIDEN: u32 = 12;

/// Compute all `n` zeros of a quasi-regime member: for n ≥ 2, one below −1
/// and n−1 inside (−1, 1).
///
/// The interior zeros are bracketed between consecutive zeros of the β+1
/// neighbor (whose zeros provably separate them); the outer zero is bracketed
/// by the closed-form bound chain for n ≥ 3 and by a doubling fallback
/// bracket `[−1 − 2^k, −1]` for n = 2.  A bracket without a sign change is
/// reported as `BracketFailure` — never silently repaired, since a failure
/// falsifies the separation structure the solver is built on.
///
/// Degree 1 is solved in closed form.  Its single zero sits below −1 only
/// when α+β+2 > 0; when α+β+2 < 0 it sits above +1 instead, and at
/// α+β+2 = 0 the member is a nonzero constant, reported as
/// `DegenerateParameters`.
pub fn zeros_quasi(n: usize, params: &ParamPair) -> Result<ZeroSet> {
    if params.regime != Regime::QuasiOrder1 {
        return Err(Error::RegimeMismatch { expected: "quasi_order1", found: params.regime });
    }
    if n < 1 {
        return Err(Error::InvalidDegree { n, min: 1, max: usize::MAX });
    }
    if n == 1 {
        // Solve the linear member directly.  Its zero lies below −1 when
        // α+β+2 > 0 but above +1 when α+β+2 < 0, and vanishes entirely at
        // α+β+2 = 0 where the member degenerates to the constant ½(α−β).
        let lead = params.alpha + params.beta + 2.0;
        if lead.abs() < tolerance::DENOMINATOR {
            return Err(Error::degenerate("alpha+beta+2", lead));
        }
        let zero = (params.beta - params.alpha) / lead;
        return certify(1, params, vec![zero], SolveMethod::BracketedHybrid, true);
    }

    let ev = Evaluator::new(n, params);
    let shifted_up = ParamPair::new(params.alpha + 1.0, params.beta + 1.0)?;
    let dev = Evaluator::new(n - 1, &shifted_up);
    let dfactor = 0.5 * (n as f64 + params.alpha + params.beta + 1.0);
    let f = |x: f64| ev.eval(x);
    let df = |x: f64| dfactor * dev.eval(x);

    let mut zeros = Vec::with_capacity(n);
    zeros.push(outer_zero(n, params, &f, &df)?);

    if n >= 2 {
        // The β+1 neighbor is orthogonal here (β+1 ∈ (−1, 0)) and its zeros
        // y_1 < … < y_n pin the interior zeros: x_{i+1} ∈ (y_i, y_{i+1}).
        let separators = zeros_orthogonal(n, &params.shift_beta(1.0)?)?;
        for w in separators.zeros.windows(2) {
            zeros.push(refine_with_check(&f, &df, w[0], w[1])?);
        }
    }

    certify(n, params, zeros, SolveMethod::BracketedHybrid, true)
}

/// Refine after an explicit sign-change check so a silent endpoint agreement
/// surfaces as `BracketFailure` with both endpoint values attached.
fn refine_with_check(
    f: &impl Fn(f64) -> f64,
    df: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo != 0.0 && f_hi != 0.0 && f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketFailure { lo, hi, f_lo, f_hi });
    }
    refine_zero(f, df, lo, hi)
}

fn outer_zero(
    n: usize,
    params: &ParamPair,
    f: &impl Fn(f64) -> f64,
    df: &impl Fn(f64) -> f64,
) -> Result<f64> {
    if n >= 3 {
        let chain = bound_chain(n, params)?;
        return refine_with_check(f, df, chain.tight_lower, chain.upper);
    }
    // Degree 2 sits below the bound chain's floor: widen a bracket ending
    // at −1 until the sign flips.
    let hi = -1.0;
    let f_hi = f(hi);
    let mut f_lo = f_hi;
    let mut lo = hi;
    for k in 0..=MAX_WIDEN {
        lo = -1.0 - f64::powi(2.0, k as i32);
        f_lo = f(lo);
        if f_lo == 0.0 {
            return Ok(lo);
        }
        if f_lo.signum() != f_hi.signum() {
            return refine_zero(f, df, lo, hi);
        }
    }
    Err(Error::BracketFailure { lo, hi, f_lo, f_hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_outer_zero() {
        let p = ParamPair::new(0.93, -1.9).unwrap();
        let zs = zeros_quasi(1, &p).unwrap();
        assert_eq!(zs.zeros.len(), 1);
        assert!((zs.zeros[0] + 2.74757).abs() < 1e-4);
        assert_eq!(zs.method, SolveMethod::BracketedHybrid);
    }

    #[test]
    fn exact_quadratic_zeros() {
        // Frozen exact roots {−3/2, −1/4} at (−0.5, −1.9).
        let p = ParamPair::new(-0.5, -1.9).unwrap();
        let zs = zeros_quasi(2, &p).unwrap();
        assert!((zs.zeros[0] + 1.5).abs() < 1e-12);
        assert!((zs.zeros[1] + 0.25).abs() < 1e-12);
    }

    #[test]
    fn frozen_degree_five_zeros() {
        let p = ParamPair::new(2.35, -1.5).unwrap();
        let zs = zeros_quasi(5, &p).unwrap();
        let expected = [
            -1.021482563796082,
            -0.885666322269148,
            -0.490587376208177,
            0.045835885138808,
            0.577706828747502,
        ];
        for (z, e) in zs.zeros.iter().zip(expected) {
            assert!((z - e).abs() < 1e-12, "{z} vs {e}");
        }
        assert!((zs.zeros[1] + 0.885666).abs() < 1e-5);
    }

    #[test]
    fn table_row_outer_zero() {
        let p = ParamPair::new(0.93, -1.9).unwrap();
        let zs = zeros_quasi(15, &p).unwrap();
        assert!((zs.zeros[0] + 1.00287).abs() < 1e-4);
        assert_eq!(zs.zeros.iter().filter(|&&z| z < -1.0).count(), 1);
        assert!(zs.zeros[1..].iter().all(|&z| -1.0 < z && z < 1.0));
    }

    #[test]
    fn degenerate_recurrence_pair_is_solvable() {
        // α+β = −2 breaks the recurrence route entirely; the sum-based
        // solver must still deliver both zeros of the quadratic.
        let p = ParamPair::new(-0.5, -1.5).unwrap();
        let zs = zeros_quasi(2, &p).unwrap();
        assert_eq!(zs.zeros.len(), 2);
        // Roots of 2x² + 2x − 1: (−1 ± √3)/2.
        let s = 3.0f64.sqrt();
        assert!((zs.zeros[0] - (-1.0 - s) / 2.0).abs() < 1e-12);
        assert!((zs.zeros[1] - (-1.0 + s) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn regime_gate() {
        let orth = ParamPair::new(0.0, 0.0).unwrap();
        assert!(matches!(zeros_quasi(5, &orth), Err(Error::RegimeMismatch { .. })));
    }
}
