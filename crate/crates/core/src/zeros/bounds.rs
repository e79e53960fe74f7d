//! Closed-form location bounds for the outer zero and the Askey-type
//! comparison point δ.

use crate::error::{Error, Result};
use crate::params::{ParamPair, Regime};
use crate::relations::scalar_factors;
use crate::tolerance;

/// The three closed-form bounds sandwiching the outer zero x₁ (degree ≥ 3,
/// quasi regime): `loose_lower < tight_lower < x₁ < upper < −1`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BoundChain {
    /// −1 + 2(β+1)/(2n+α+β)
    pub loose_lower: f64,
    /// −1 + 2(β+1)(β+3) / ((β+3)(α+β+2) + 2(n−1)(n+α+β+2))
    pub tight_lower: f64,
    /// −1 + 2(β+1)(β+2)/((n+β+1)(n+α+β+1))
    pub upper: f64,
}

fn require_quasi(params: &ParamPair) -> Result<()> {
    if params.regime == Regime::QuasiOrder1 {
        Ok(())
    } else {
        Err(Error::RegimeMismatch { expected: "quasi_order1", found: params.regime })
    }
}

/// Evaluate the closed-form bound chain for the outer zero.
pub fn bound_chain(n: usize, params: &ParamPair) -> Result<BoundChain> {
    require_quasi(params)?;
    if n < 3 {
        return Err(Error::InvalidDegree { n, min: 3, max: usize::MAX });
    }
    let f = scalar_factors(n, params)?;
    if f.c_n.abs() < tolerance::DENOMINATOR {
        return Err(Error::degenerate("bound-chain denominator", f.c_n));
    }
    Ok(BoundChain {
        loose_lower: -1.0 + f.a_n,
        tight_lower: -1.0 + f.d_n / f.c_n,
        upper: -f.b_n,
    })
}

/// The comparison point δ = −1 − 2(β+1)/(α+β+2n+2) that decides between the
/// two interlacing outcomes for the β+2 neighbor family.
pub fn askey_delta(n: usize, params: &ParamPair) -> Result<f64> {
    require_quasi(params)?;
    let denom = params.alpha + params.beta + 2.0 * n as f64 + 2.0;
    if denom.abs() < tolerance::DENOMINATOR {
        return Err(Error::degenerate("alpha+beta+2n+2", denom));
    }
    Ok(-1.0 - 2.0 * (params.beta + 1.0) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_bound_rows() {
        // Degree 15 at three parameter pairs; values frozen from an exact
        // independent evaluation of the closed forms.
        let p = ParamPair::new(0.93, -1.9).unwrap();
        let b = bound_chain(15, &p).unwrap();
        assert!((b.tight_lower - -1.0044).abs() < 1e-4);
        assert!((b.upper - -1.00085).abs() < 1e-4);

        let p3 = ParamPair::new(-0.93, -1.05).unwrap();
        let b3 = bound_chain(15, &p3).unwrap();
        assert!((b3.tight_lower - -1.0004636).abs() < 1e-6);
        // The formula gives ≈ −1.000453, comfortably above tight_lower.
        assert!((b3.upper - -1.00045324643724445).abs() < 1e-10);
        assert!(b3.tight_lower < b3.upper && b3.upper < -1.0);

        let p5 = ParamPair::new(8.3, -1.55).unwrap();
        let b5 = bound_chain(15, &p5).unwrap();
        assert!((b5.tight_lower - -1.00235).abs() < 1e-5);
        assert!((b5.upper - -1.00151).abs() < 1e-5);
    }

    #[test]
    fn frozen_delta_values() {
        let p = ParamPair::new(2.35, -1.5).unwrap();
        assert!((askey_delta(5, &p).unwrap() - -0.922179).abs() < 1e-6);
        let q = ParamPair::new(2.35, -1.9).unwrap();
        assert!((askey_delta(5, &q).unwrap() - -0.855422).abs() < 1e-6);
    }

    #[test]
    fn delta_tends_to_minus_one_as_beta_rises() {
        let near = ParamPair::new(1.0, -1.0 - 1e-9).unwrap();
        assert!((askey_delta(4, &near).unwrap() + 1.0).abs() < 1e-9);
    }

    #[test]
    fn regime_and_degree_gates() {
        let orth = ParamPair::new(0.5, 0.5).unwrap();
        assert!(matches!(bound_chain(5, &orth), Err(Error::RegimeMismatch { .. })));
        assert!(matches!(askey_delta(5, &orth), Err(Error::RegimeMismatch { .. })));
        let p = ParamPair::new(0.93, -1.9).unwrap();
        assert!(matches!(bound_chain(2, &p), Err(Error::InvalidDegree { .. })));
    }
}
