//! Polynomial evaluation along independent routes.
//!
//! * [`eval_recurrence`]: forward three-term recurrence.  Fast and accurate,
//!   but undefined where a recurrence denominator degenerates (see
//!   [`crate::recurrence`]).
//! * [`eval_sum`]: the finite sum
//!   `P_n(x) = Σ_ν binom(n+α, ν) binom(n+β, n−ν) ((x−1)/2)^(n−ν) ((x+1)/2)^ν`
//!   with generalized binomials, defined for every real (α, β) — including
//!   recurrence-degenerate pairs such as α+β = −2.  The slow scanning oracle
//!   runs entirely on its compensated variant, keeping it independent of the
//!   recurrence machinery the solvers use.
//! * the private [`Evaluator`], which the zero solvers and certification use:
//!   it picks the best-conditioned of the exact routes available for the
//!   parameter pair (an orthogonal-neighbor split in the quasi regime, the
//!   recurrence, or the compensated sum).
//!
//! The routes are algebraically identical; tests hold them to relative
//! agreement [`crate::tolerance::EVAL_REL`] wherever both are defined.

use crate::error::{Error, Result};
use crate::params::ParamPair;
use crate::recurrence::recurrence_coeffs;

fn check_finite_x(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!("evaluation point x = {x} is not finite")))
    }
}

/// Generalized binomial coefficient `binom(a, k)` for real a, integer k ≥ 0.
fn binomial(a: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 1..=k {
        acc *= (a - (k - i) as f64) / i as f64;
    }
    acc
}

/// Value of `P_1` from the seed row of the recurrence.
fn seed_p1(params: &ParamPair, x: f64) -> f64 {
    0.5 * (params.alpha + params.beta + 2.0) * x + 0.5 * (params.alpha - params.beta)
}

/// Evaluate `P_n^(α,β)(x)` by the forward three-term recurrence.
pub fn eval_recurrence(n: usize, params: &ParamPair, x: f64) -> Result<f64> {
    check_finite_x(x)?;
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = seed_p1(params, x);
    for k in 2..=n {
        let c = recurrence_coeffs(k, params)?;
        let next = ((x - c.d_n) * cur - c.e_n * prev) / c.c_n;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Per-degree sum coefficients `binom(n+α, ν) · binom(n+β, n−ν)`, precomputed
/// once so the oracle's dense sign scan does not redo the binomial products at
/// every grid point.
pub(crate) struct SumCoeffs {
    n: usize,
    coeffs: Vec<f64>,
}

impl SumCoeffs {
    pub(crate) fn new(n: usize, params: &ParamPair) -> Self {
        let coeffs = (0..=n)
            .map(|v| binomial(n as f64 + params.alpha, v) * binomial(n as f64 + params.beta, n - v))
            .collect();
        SumCoeffs { n, coeffs }
    }

    /// Fast evaluation: factor out the larger of u = (x−1)/2, w = (x+1)/2 and
    /// run Horner in the bounded ratio.  No allocation, O(n) flops.
    pub(crate) fn eval_fast(&self, x: f64) -> f64 {
        let u = 0.5 * (x - 1.0);
        let w = 0.5 * (x + 1.0);
        if u.abs() >= w.abs() {
            // Σ c_ν u^(n−ν) w^ν = u^n · Σ c_ν (w/u)^ν
            let r = w / u;
            let mut acc = 0.0;
            for &c in self.coeffs.iter().rev() {
                acc = acc * r + c;
            }
            acc * u.powi(self.n as i32)
        } else {
            // mirror: factor w^n, ratio u/w, coefficients reversed
            let r = u / w;
            let mut acc = 0.0;
            for &c in self.coeffs.iter() {
                acc = acc * r + c;
            }
            acc * w.powi(self.n as i32)
        }
    }

    /// Neumaier-compensated term sum; the in-process reference evaluation.
    pub(crate) fn eval_compensated(&self, x: f64) -> f64 {
        let u = 0.5 * (x - 1.0);
        let w = 0.5 * (x + 1.0);
        let mut sum = 0.0;
        let mut comp = 0.0;
        for (v, &c) in self.coeffs.iter().enumerate() {
            let term = c * u.powi((self.n - v) as i32) * w.powi(v as i32);
            let t = sum + term;
            if sum.abs() >= term.abs() {
                comp += (sum - t) + term;
            } else {
                comp += (term - t) + sum;
            }
            sum = t;
        }
        sum + comp
    }
}

/// Evaluate `P_n^(α,β)(x)` by the finite sum with plain summation.
/// Defined for all real parameters, including recurrence-degenerate pairs.
pub fn eval_sum(n: usize, params: &ParamPair, x: f64) -> Result<f64> {
    check_finite_x(x)?;
    let u = 0.5 * (x - 1.0);
    let w = 0.5 * (x + 1.0);
    let mut sum = 0.0;
    for v in 0..=n {
        sum += binomial(n as f64 + params.alpha, v)
            * binomial(n as f64 + params.beta, n - v)
            * u.powi((n - v) as i32)
            * w.powi(v as i32);
    }
    Ok(sum)
}

/// Finite-sum evaluation with compensated (Neumaier) summation.  Used as the
/// reference inside the zero solvers and the relation residuals.
pub fn eval_sum_compensated(n: usize, params: &ParamPair, x: f64) -> Result<f64> {
    check_finite_x(x)?;
    Ok(SumCoeffs::new(n, params).eval_compensated(x))
}

/// Exact rewrite of a quasi-regime member as a combination of two
/// orthogonal-regime members one degree down:
///
/// `P_n^(α,β)(x) = (x+1)·(α+β+n+1)/(2n)·P_{n−1}^(α,β+2)(x)
///                 − (β+1)/n·P_{n−1}^(α,β+1)(x)`
///
/// For −2 < β < −1 both right-hand members sit in the orthogonal regime,
/// where the forward recurrence keeps near-machine accuracy; the direct
/// recurrence and the finite sum both lose digits for some quasi pairs at
/// high degree, so this is the preferred route there.
struct SplitRoute {
    up1: ParamPair,
    up2: ParamPair,
    /// `(α+β+n+1)/(2n)`, multiplying `(x+1)·P_{n−1}^(α,β+2)`.
    lead: f64,
    /// `(β+1)/n`, multiplying `−P_{n−1}^(α,β+1)`.
    mix: f64,
}

/// Best-available pointwise evaluator for one family member.
///
/// Mirror-regime pairs are reflected onto their quasi-regime partner through
/// the exact parity identity, so both sides of the mirror share one set of
/// numerics.  Evaluation then prefers, in order: the orthogonal-neighbor
/// split (quasi regime only), the forward recurrence, and the compensated
/// finite sum — each an exact identity, differing only in conditioning.
pub(crate) struct Evaluator {
    n: usize,
    params: ParamPair,
    parity: f64,
    flip: bool,
    split: Option<SplitRoute>,
    sum: SumCoeffs,
    recurrence_ok: bool,
}

impl Evaluator {
    pub(crate) fn new(n: usize, params: &ParamPair) -> Self {
        use crate::params::Regime;
        let (inner, parity, flip) = if params.regime == Regime::QuasiOrder1Mirrored {
            let swapped = ParamPair::new(params.beta, params.alpha)
                .expect("swapping finite parameters cannot fail");
            (swapped, if n % 2 == 0 { 1.0 } else { -1.0 }, true)
        } else {
            (*params, 1.0, false)
        };
        let split = if inner.regime == Regime::QuasiOrder1 && n >= 1 {
            let nf = n as f64;
            match (inner.shift_beta(1.0), inner.shift_beta(2.0)) {
                (Ok(up1), Ok(up2)) => Some(SplitRoute {
                    up1,
                    up2,
                    lead: (inner.alpha + inner.beta + nf + 1.0) / (2.0 * nf),
                    mix: (inner.beta + 1.0) / nf,
                }),
                _ => None,
            }
        } else {
            None
        };
        // Degeneracy depends only on (n, α, β); probe once at a fixed x.
        let recurrence_ok = eval_recurrence(n, &inner, 0.375).is_ok();
        Evaluator { n, params: inner, parity, flip, split, sum: SumCoeffs::new(n, &inner), recurrence_ok }
    }

    /// The split-route value at an already-reflected abscissa, when the route
    /// is available and its recurrences are defined.
    fn split_value(&self, t: f64) -> Option<f64> {
        let s = self.split.as_ref()?;
        let hi = eval_recurrence(self.n - 1, &s.up2, t).ok()?;
        let lo = eval_recurrence(self.n - 1, &s.up1, t).ok()?;
        Some((t + 1.0) * s.lead * hi - s.mix * lo)
    }

    pub(crate) fn eval(&self, x: f64) -> f64 {
        let t = if self.flip { -x } else { x };
        let v = if let Some(v) = self.split_value(t) {
            v
        } else if self.recurrence_ok {
            eval_recurrence(self.n, &self.params, t).unwrap_or_else(|_| self.sum.eval_compensated(t))
        } else {
            self.sum.eval_compensated(t)
        };
        self.parity * v
    }

    /// Smallest magnitude any route reports for `|P_n(x)|`.  All routes
    /// compute the same exact quantity and differ only in rounding noise, so
    /// the minimum is the sharpest available certificate that a candidate
    /// zero really annihilates the polynomial; a genuinely nonzero value
    /// shows up large in every route.
    pub(crate) fn min_magnitude(&self, x: f64) -> f64 {
        let t = if self.flip { -x } else { x };
        let mut best = self.sum.eval_compensated(t).abs();
        if let Some(v) = self.split_value(t) {
            best = best.min(v.abs());
        }
        if self.recurrence_ok {
            if let Ok(v) = eval_recurrence(self.n, &self.params, t) {
                best = best.min(v.abs());
            }
        }
        best
    }
}

/// Derivative `d/dx P_n^(α,β)(x) = (n+α+β+1)/2 · P_{n−1}^(α+1,β+1)(x)`.
/// The shifted family is evaluated over the compensated sum route.
pub fn eval_derivative(n: usize, params: &ParamPair, x: f64) -> Result<f64> {
    check_finite_x(x)?;
    if n == 0 {
        return Ok(0.0);
    }
    let shifted = ParamPair::new(params.alpha + 1.0, params.beta + 1.0)?;
    let factor = 0.5 * (n as f64 + params.alpha + params.beta + 1.0);
    Ok(factor * eval_sum_compensated(n - 1, &shifted, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn degree_zero_is_one() {
        let p = ParamPair::new(0.93, -1.9).unwrap();
        assert_eq!(eval_recurrence(0, &p, 0.2).unwrap(), 1.0);
        assert_eq!(eval_sum(0, &p, 0.2).unwrap(), 1.0);
    }

    #[test]
    fn legendre_values() {
        let p = ParamPair::new(0.0, 0.0).unwrap();
        assert_relative_eq!(eval_recurrence(1, &p, 0.5).unwrap(), 0.5, max_relative = 1e-15);
        // P_5(0.3) = (63·0.3^5 − 70·0.3^3 + 15·0.3)/8
        let expected = (63.0 * 0.3f64.powi(5) - 70.0 * 0.3f64.powi(3) + 15.0 * 0.3) / 8.0;
        assert_relative_eq!(eval_recurrence(5, &p, 0.3).unwrap(), expected, max_relative = 1e-13);
        assert_relative_eq!(eval_sum(5, &p, 0.3).unwrap(), expected, max_relative = 1e-13);
    }

    #[test]
    fn frozen_reference_values() {
        // Exact rational evaluations, frozen independently of this crate.
        let p = ParamPair::new(2.35, -1.5).unwrap();
        assert_relative_eq!(eval_sum(5, &p, 0.0).unwrap(), 0.155657060302734375, max_relative = 1e-13);
        assert_relative_eq!(eval_recurrence(5, &p, 0.0).unwrap(), 0.155657060302734375, max_relative = 1e-12);
        assert_relative_eq!(eval_sum(5, &p, -1.0).unwrap(), 0.02734375, max_relative = 1e-14);

        let q = ParamPair::new(0.93, -1.9).unwrap();
        assert_relative_eq!(eval_sum(5, &q, 0.3).unwrap(), -0.30585083133128419, max_relative = 1e-12);
        assert_relative_eq!(eval_recurrence(5, &q, 0.3).unwrap(), -0.30585083133128419, max_relative = 1e-12);
    }

    #[test]
    fn degenerate_pair_sum_route_still_works() {
        // α+β = −2: recurrence refuses, the sum route gives x²/4 + x/4 − 1/8.
        let p = ParamPair::new(-0.5, -1.5).unwrap();
        assert!(eval_recurrence(2, &p, 0.7).is_err());
        assert_relative_eq!(eval_sum(2, &p, 0.7).unwrap(), 0.1725, max_relative = 1e-14);
        assert_relative_eq!(eval_sum_compensated(2, &p, 0.7).unwrap(), 0.1725, max_relative = 1e-14);
    }

    #[test]
    fn routes_agree_in_regime() {
        let p = ParamPair::new(8.3, -1.55).unwrap();
        for n in [1usize, 3, 7, 15, 20] {
            for &x in &[-2.5, -1.0, -0.37, 0.0, 0.9, 1.0, 2.2] {
                let a = eval_recurrence(n, &p, x).unwrap();
                let b = eval_sum_compensated(n, &p, x).unwrap();
                let scale = a.abs().max(b.abs()).max(1.0);
                assert!((a - b).abs() / scale < crate::tolerance::EVAL_REL, "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn fast_and_compensated_sum_agree() {
        let p = ParamPair::new(0.93, -1.9).unwrap();
        let sc = SumCoeffs::new(12, &p);
        for &x in &[-4.9, -1.0003, -0.2, 0.0, 0.77, 1.0, 3.3] {
            let a = sc.eval_fast(x);
            let b = sc.eval_compensated(x);
            let scale = a.abs().max(b.abs()).max(1.0);
            assert!((a - b).abs() / scale < 1e-12, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn derivative_frozen_value() {
        let p = ParamPair::new(0.93, -1.9).unwrap();
        assert_relative_eq!(
            eval_derivative(6, &p, 0.2).unwrap(),
            -0.29991438580633160,
            max_relative = 1e-12
        );
        assert_eq!(eval_derivative(0, &p, 0.2).unwrap(), 0.0);
    }

    #[test]
    fn symmetry_spot_check() {
        // P_n^(α,β)(x) = (−1)^n P_n^(β,α)(−x)
        let p = ParamPair::new(0.93, -1.9).unwrap();
        let r = p.reflected();
        for n in [1usize, 2, 5, 10] {
            for &x in &[-1.4, -0.3, 0.6, 1.2] {
                let lhs = eval_sum_compensated(n, &p, x).unwrap();
                let rhs = eval_sum_compensated(n, &r, -x).unwrap() * if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12 * lhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn non_finite_x_rejected() {
        let p = ParamPair::new(0.0, 0.0).unwrap();
        assert!(eval_sum(3, &p, f64::NAN).is_err());
        assert!(eval_recurrence(3, &p, f64::INFINITY).is_err());
    }
}
