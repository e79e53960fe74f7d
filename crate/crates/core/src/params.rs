//! Parameter pairs and regime classification.
//!
//! The toolkit distinguishes three usable regimes plus a rejection bucket:
//!
//! * `Orthogonal`: α > −1, β > −1 — all zeros in (−1, 1).
//! * `QuasiOrder1`: α > −1, −2 < β < −1 — exactly one zero below −1.
//! * `QuasiOrder1Mirrored`: −2 < α < −1, β > −1 — exactly one zero above 1,
//!   the image of the previous regime under x ↦ −x.
//! * `Unsupported`: everything else, including the boundary lines α = −1 and
//!   β = −1 themselves (comparisons are strict).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Orthogonal,
    QuasiOrder1,
    QuasiOrder1Mirrored,
    Unsupported,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Regime::Orthogonal => "orthogonal",
            Regime::QuasiOrder1 => "quasi_order1",
            Regime::QuasiOrder1Mirrored => "quasi_order1_mirrored",
            Regime::Unsupported => "unsupported",
        };
        f.write_str(s)
    }
}

/// A validated (α, β) pair with its classification attached.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPair {
    pub alpha: f64,
    pub beta: f64,
    pub regime: Regime,
}

impl ParamPair {
    /// Classify and bundle a pair.  The only rejection here is non-finite
    /// input; out-of-range pairs come back tagged `Unsupported` so callers
    /// must gate on the regime explicitly.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let regime = classify(alpha, beta)?;
        Ok(ParamPair { alpha, beta, regime })
    }

    /// The (β, α) pair, whose polynomials are the x ↦ −x images of this one.
    pub fn reflected(&self) -> ParamPair {
        reflect(self)
    }

    /// Same α with β shifted; used by the mixed relations and the bracketing
    /// construction, which lean on the β+1 … β+4 companion families.
    pub fn shift_beta(&self, shift: f64) -> Result<ParamPair> {
        ParamPair::new(self.alpha, self.beta + shift)
    }
}

/// Total classification of a real (α, β) pair.
pub fn classify(alpha: f64, beta: f64) -> Result<Regime> {
    if !alpha.is_finite() {
        return Err(Error::invalid(format!("alpha = {alpha} is not finite")));
    }
    if !beta.is_finite() {
        return Err(Error::invalid(format!("beta = {beta} is not finite")));
    }
    let regime = if alpha > -1.0 && beta > -1.0 {
        Regime::Orthogonal
    } else if alpha > -1.0 && beta > -2.0 && beta < -1.0 {
        Regime::QuasiOrder1
    } else if beta > -1.0 && alpha > -2.0 && alpha < -1.0 {
        Regime::QuasiOrder1Mirrored
    } else {
        Regime::Unsupported
    };
    Ok(regime)
}

/// Swap α and β.  `P_n^(α,β)(x) = (−1)^n P_n^(β,α)(−x)`, so the reflected
/// pair carries the mirror-image zero configuration.
pub fn reflect(params: &ParamPair) -> ParamPair {
    let regime = match params.regime {
        Regime::Orthogonal => Regime::Orthogonal,
        Regime::QuasiOrder1 => Regime::QuasiOrder1Mirrored,
        Regime::QuasiOrder1Mirrored => Regime::QuasiOrder1,
        Regime::Unsupported => Regime::Unsupported,
    };
    ParamPair { alpha: params.beta, beta: params.alpha, regime }
}
