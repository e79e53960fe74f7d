//! Safeguarded Newton refinement inside a sign-change bracket.

use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Refine the unique root of `f` inside `[lo, hi]`.
///
/// Requires a strict sign change: `f(lo)·f(hi) < 0` (an exact zero at either
/// endpoint is returned immediately).  Newton steps are taken whenever they
/// stay inside the current bracket and halve it fast enough; otherwise the
/// method falls back to bisection, so it always stays inside `[lo, hi]` and
/// always converges for continuous `f`.
pub fn refine_zero(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::invalid(format!("bracket [{lo}, {hi}] is not a finite interval")));
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketFailure { lo, hi, f_lo, f_hi });
    }

    // Orient so that f(xl) < 0 < f(xh); xl/xh need not be ordered.
    let (mut xl, mut xh) = if f_lo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut rts = 0.5 * (lo + hi);
    let mut dx_old = (hi - lo).abs();
    let mut dx = dx_old;
    let mut fr = f(rts);
    let mut dfr = df(rts);
    let xacc = 4.0 * f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);

    for _ in 0..MAX_ITER {
        let newton_leaves_bracket =
            ((rts - xh) * dfr - fr) * ((rts - xl) * dfr - fr) > 0.0;
        let newton_too_slow = (2.0 * fr).abs() > (dx_old * dfr).abs();
        if newton_leaves_bracket || newton_too_slow {
            dx_old = dx;
            dx = 0.5 * (xh - xl);
            rts = xl + dx;
            if xl == rts {
                return Ok(rts);
            }
        } else {
            dx_old = dx;
            dx = fr / dfr;
            let prev = rts;
            rts -= dx;
            if prev == rts {
                return Ok(rts);
            }
        }
        if dx.abs() < xacc {
            return Ok(rts);
        }
        fr = f(rts);
        dfr = df(rts);
        if fr == 0.0 {
            return Ok(rts);
        }
        if fr < 0.0 {
            xl = rts;
        } else {
            xh = rts;
        }
    }
    Err(Error::ConvergenceFailure {
        what: format!("no convergence in {MAX_ITER} iterations on [{lo}, {hi}]"),
    })
}
