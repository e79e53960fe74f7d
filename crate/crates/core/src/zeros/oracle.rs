//! Brute-force zero oracle: exhaustive sign scan plus bisection.
//!
//! Deliberately ignorant of all bracketing theory — it only trusts the
//! finite-sum evaluator — so the structured solvers can be validated against
//! it.  Scan cost is O(n · 100 000) evaluations, hence the degree cap.

use crate::error::{Error, Result};
use crate::eval::SumCoeffs;
use crate::params::ParamPair;

use super::{certify, SolveMethod, ZeroSet};

const SCAN_LO: f64 = -5.0;
const SCAN_STEP: f64 = 1e-4;
const SCAN_POINTS: usize = 100_000;
const BISECT_WIDTH: f64 = 1e-12;
const MAX_DEGREE: usize = 12;

/// Locate all `n` real zeros by scanning `[−5, 5]` at step 1e−4 for sign
/// changes and bisecting each one to width 1e−12.  Errors with
/// `OracleFailure` when the number of sign changes is not exactly `n`.
/// Location patterns are *not* enforced here — the oracle is used to test
/// them.
pub fn oracle_zeros(n: usize, params: &ParamPair) -> Result<ZeroSet> {
    if n < 1 || n > MAX_DEGREE {
        return Err(Error::InvalidDegree { n, min: 1, max: MAX_DEGREE });
    }
    let sc = SumCoeffs::new(n, params);
    let mut zeros = Vec::with_capacity(n);

    let mut x_prev = SCAN_LO;
    let mut f_prev = sc.eval_fast(x_prev);
    for k in 1..=SCAN_POINTS {
        let x = SCAN_LO + k as f64 * SCAN_STEP;
        let f = sc.eval_fast(x);
        if f_prev == 0.0 {
            zeros.push(x_prev);
        } else if f != 0.0 && f_prev.signum() != f.signum() {
            zeros.push(bisect(&sc, x_prev, f_prev, x));
        }
        x_prev = x;
        f_prev = f;
    }
    if f_prev == 0.0 {
        zeros.push(x_prev);
    }

    if zeros.len() != n {
        return Err(Error::OracleFailure { expected: n, found: zeros.len() });
    }
    certify(n, params, zeros, SolveMethod::Oracle, false)
}

fn bisect(sc: &SumCoeffs, mut lo: f64, f_lo: f64, mut hi: f64) -> f64 {
    let sign_lo = f_lo.signum();
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = sc.eval_compensated(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
