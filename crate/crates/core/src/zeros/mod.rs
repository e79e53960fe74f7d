//! Zero computation for both parameter regimes.
//!
//! * [`zeros_orthogonal`]: symmetric-tridiagonal eigenvalue method plus one
//!   Newton polish per node (classical orthogonal regime, all zeros inside
//!   (−1, 1)).
//! * [`zeros_quasi`]: bracketed hybrid for the quasi-orthogonal regime — the
//!   n−1 interior zeros are pinned between consecutive zeros of the β+1
//!   neighbor family, and the single zero below −1 is bracketed by the
//!   closed-form bound chain (degree ≥ 3) or a widened fallback bracket.
//! * [`oracle_zeros`]: slow exhaustive sign scan, independent of all
//!   bracketing structure, for cross-validation at small degree.
//!
//! Every constructor funnels through the same certification: right count,
//! strictly increasing with gaps above `tolerance::SEPARATION`, per-zero
//! scaled residuals below `tolerance::ROOT`, and the regime's zero-location
//! pattern (all inside (−1,1); exactly one below −1; exactly one above +1).

pub mod bounds;
mod oracle;
mod orthogonal;
mod quasi;
mod refine;

pub use oracle::oracle_zeros;
pub use orthogonal::zeros_orthogonal;
pub use quasi::zeros_quasi;
pub use refine::refine_zero;

use crate::error::{Error, Result};
use crate::eval::{eval_derivative, Evaluator};
use crate::params::{ParamPair, Regime};
use crate::tolerance;

/// How a [`ZeroSet`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    GolubWelsch,
    BracketedHybrid,
    Oracle,
}

/// A certified set of all real zeros of one family member.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ZeroSet {
    pub n: usize,
    pub params: ParamPair,
    /// Strictly increasing zeros; length is exactly `n`.
    pub zeros: Vec<f64>,
    pub method: SolveMethod,
    /// Per-zero |P_n(z)| / max(1, |P_n′(z)|).
    pub residuals: Vec<f64>,
}

impl ZeroSet {
    /// The zero below −1 (quasi regime) or above +1 (mirrored regime).
    pub fn outer_zero(&self) -> Option<f64> {
        match self.params.regime {
            Regime::QuasiOrder1 => self.zeros.first().copied().filter(|&z| z < -1.0),
            Regime::QuasiOrder1Mirrored => self.zeros.last().copied().filter(|&z| z > 1.0),
            _ => None,
        }
    }

    /// Zeros strictly inside (−1, 1).
    pub fn interior_zeros(&self) -> &[f64] {
        match self.params.regime {
            Regime::QuasiOrder1 => &self.zeros[1.min(self.zeros.len())..],
            Regime::QuasiOrder1Mirrored => &self.zeros[..self.zeros.len().saturating_sub(1)],
            _ => &self.zeros,
        }
    }
}

/// Validate ordering, separation, residuals, and (optionally) the regime's
/// zero-location pattern, then package the result.
pub(crate) fn certify(
    n: usize,
    params: &ParamPair,
    zeros: Vec<f64>,
    method: SolveMethod,
    enforce_location: bool,
) -> Result<ZeroSet> {
    if zeros.len() != n {
        return Err(Error::ConvergenceFailure {
            what: format!("expected {n} zeros, solver produced {}", zeros.len()),
        });
    }
    for w in zeros.windows(2) {
        if !(w[1] - w[0] > tolerance::SEPARATION) {
            return Err(Error::SeparationFailure { left: w[0], right: w[1] });
        }
    }
    let mut residuals = Vec::with_capacity(n);
    let ev = Evaluator::new(n, params);
    for &z in &zeros {
        let f = ev.min_magnitude(z);
        let df = eval_derivative(n, params, z)?;
        let r = f / df.abs().max(1.0);
        if !(r <= tolerance::ROOT) {
            return Err(Error::ConvergenceFailure {
                what: format!("scaled residual {r:e} at zero {z} exceeds {:e}", tolerance::ROOT),
            });
        }
        residuals.push(r);
    }
    if enforce_location {
        check_location(params.regime, &zeros)?;
    }
    Ok(ZeroSet { n, params: *params, zeros, method, residuals })
}

fn check_location(regime: Regime, zeros: &[f64]) -> Result<()> {
    let below = zeros.iter().filter(|&&z| z <= -1.0).count();
    let above = zeros.iter().filter(|&&z| z >= 1.0).count();
    // At degree 1 the single zero sits outside [−1, 1] but its side flips
    // with the sign of α+β+2, so only "exactly one outside" can be enforced.
    let degree_one = zeros.len() == 1;
    let ok = match regime {
        Regime::Orthogonal => below == 0 && above == 0,
        Regime::QuasiOrder1 if degree_one => below + above == 1,
        Regime::QuasiOrder1 => below == 1 && above == 0 && zeros[0] < -1.0,
        Regime::QuasiOrder1Mirrored if degree_one => below + above == 1,
        Regime::QuasiOrder1Mirrored => below == 0 && above == 1 && zeros[zeros.len() - 1] > 1.0,
        Regime::Unsupported => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ConvergenceFailure {
            what: format!(
                "zero locations violate the {regime} pattern: {below} at or below -1, {above} at or above +1 of {}",
                zeros.len()
            ),
        })
    }
}

/// Compute all real zeros, dispatching on the parameter regime: eigenvalue
/// method when orthogonal, bracketed hybrid when quasi-orthogonal, and the
/// reflected bracketed hybrid when mirrored (zeros negated and reversed,
/// residuals recomputed against the original parameters).
pub fn solve_zeros(n: usize, params: &ParamPair) -> Result<ZeroSet> {
    match params.regime {
        Regime::Orthogonal => zeros_orthogonal(n, params),
        Regime::QuasiOrder1 => zeros_quasi(n, params),
        Regime::QuasiOrder1Mirrored => {
            let reflected = params.reflected();
            let zs = zeros_quasi(n, &reflected)?;
            let zeros: Vec<f64> = zs.zeros.iter().rev().map(|z| -z).collect();
            certify(n, params, zeros, SolveMethod::BracketedHybrid, true)
        }
        Regime::Unsupported => Err(Error::RegimeMismatch {
            expected: "orthogonal, quasi_order1, or quasi_order1_mirrored",
            found: Regime::Unsupported,
        }),
    }
}
