//! Mixed three-term relations connecting `P_n^(α,β)` with β-shifted
//! neighbors, plus the scalar factors shared with the zero-bound chain.
//!
//! Each relation is an exact polynomial identity: a signed combination of two
//! or three family members (possibly at degree n−2, n−1, or n+1 and at β+1 …
//! β+4) that vanishes identically in x.  [`mixed_relation_residual`] evaluates
//! every member through the compensated sum route and returns the combination
//! normalized by the largest term magnitude, so a correct implementation
//! produces residuals at roundoff level (`tolerance::RESIDUAL_REL` is the
//! acceptance line) for all valid parameters.

use crate::error::{Error, Result};
use crate::eval::{eval_recurrence, eval_sum_compensated};
use crate::params::ParamPair;
use crate::tolerance;

/// Identifiers for the seven supported relations.
///
/// The tags are short opaque codes; what each one connects:
///
/// * `R217` — `P_n`, `P_{n−1}`, and the β+1 neighbor at degree n−2.
/// * `Rfo`  — `P_n`, plus β+1 and β+2 neighbors at degree n−1.
/// * `Rn2b2` — `P_n`, `P_{n−1}`, and the β+2 neighbor at degree n−2.
/// * `Rn2b3` — `P_n`, `P_{n−1}`, and the β+3 neighbor at degree n−2.
/// * `Rn2b4` — `P_n`, `P_{n−1}`, and the β+4 neighbor at degree n−2.
/// * `R51`  — β+1 and β+2 neighbors at degree n against `P_n`.
/// * `Rain` — the β+1 neighbor at degree n against `P_{n+1}` and `P_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationId {
    R217,
    Rfo,
    Rn2b2,
    Rn2b3,
    Rn2b4,
    R51,
    Rain,
}

impl RelationId {
    /// Every supported relation, in a fixed canonical order.
    pub const ALL: [RelationId; 7] = [
        RelationId::R217,
        RelationId::Rfo,
        RelationId::Rn2b2,
        RelationId::Rn2b3,
        RelationId::Rn2b4,
        RelationId::R51,
        RelationId::Rain,
    ];

    /// Smallest degree the relation is defined for (relations touching a
    /// degree-(n−2) member need n ≥ 3).
    pub fn n_floor(self) -> usize {
        match self {
            RelationId::R217 | RelationId::Rn2b2 | RelationId::Rn2b3 | RelationId::Rn2b4 => 3,
            RelationId::Rfo | RelationId::R51 | RelationId::Rain => 2,
        }
    }
}

impl std::fmt::Display for RelationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RelationId::R217 => "r217",
            RelationId::Rfo => "rfo",
            RelationId::Rn2b2 => "rn2b2",
            RelationId::Rn2b3 => "rn2b3",
            RelationId::Rn2b4 => "rn2b4",
            RelationId::R51 => "r51",
            RelationId::Rain => "rain",
        };
        f.write_str(s)
    }
}

/// The five scalar factors shared by the relations and the zero-bound chain.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub(crate) struct ScalarFactors {
    pub a_n: f64,
    pub b_n: f64,
    pub c_n: f64,
    pub d_n: f64,
    pub e_n: f64,
}

fn guarded(what: &str, value: f64) -> Result<f64> {
    if value.abs() < tolerance::DENOMINATOR {
        Err(Error::degenerate(what, value))
    } else {
        Ok(value)
    }
}

/// Compute the scalar factors
///
/// * a_n = 2(β+1)/(2n+α+β)
/// * b_n = 1 − 2(β+1)(β+2)/((n+β+1)(n+α+β+1))
/// * c_n = (β+3)(α+β+2) + 2(n−1)(n+α+β+2)
/// * d_n = 2(β+1)(β+3)
/// * e_n = (2n+α+β)(n+α−1)(n+α+β+1)(n+α+β+2)
///
/// guarding every denominator against `tolerance::DENOMINATOR`.
pub(crate) fn scalar_factors(n: usize, params: &ParamPair) -> Result<ScalarFactors> {
    let a = params.alpha;
    let b = params.beta;
    let nf = n as f64;
    let two_n_ab = guarded("2n+alpha+beta", 2.0 * nf + a + b)?;
    let n_b1 = guarded("n+beta+1", nf + b + 1.0)?;
    let n_ab1 = guarded("n+alpha+beta+1", nf + a + b + 1.0)?;
    Ok(ScalarFactors {
        a_n: 2.0 * (b + 1.0) / two_n_ab,
        b_n: 1.0 - 2.0 * (b + 1.0) * (b + 2.0) / (n_b1 * n_ab1),
        c_n: (b + 3.0) * (a + b + 2.0) + 2.0 * (nf - 1.0) * (nf + a + b + 2.0),
        d_n: 2.0 * (b + 1.0) * (b + 3.0),
        e_n: two_n_ab * (nf + a - 1.0) * n_ab1 * (nf + a + b + 2.0),
    })
}

/// Grouped coefficients of the degree-lowering relation `R217`:
/// `(k1 − (x+1)·k2)·P_{n−1} + (1+x)·k3·P_{n−2}^(α,β+1) + k4·P_n = 0`.
pub(crate) fn k_constants(n: usize, params: &ParamPair) -> (f64, f64, f64, f64) {
    let a = params.alpha;
    let b = params.beta;
    let nf = n as f64;
    let k1 = 2.0 * (b + nf) * (a + b + nf);
    let k2 = (a + b + 2.0 * nf - 1.0) * (a + b + 2.0 * nf);
    let k3 = (a + nf - 1.0) * (a + b + 2.0 * nf);
    let k4 = 2.0 * nf * (a + b + nf);
    (k1, k2, k3, k4)
}

/// Coefficient bundle for one relation at one (n, α, β).
///
/// All five scalar factors are always populated; `a_poly` carries the linear
/// coefficient polynomial used by `Rn2b3` (constant term first) and `b_poly`
/// the quadratic used by `Rn2b4`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MixedRelationCoeffs {
    pub relation_id: RelationId,
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    /// a_n = 2(β+1)/(2n+α+β)
    pub a_n: f64,
    /// b_n = 1 − 2(β+1)(β+2)/((n+β+1)(n+α+β+1))
    pub b_n: f64,
    /// c_n = (β+3)(α+β+2) + 2(n−1)(n+α+β+2)
    pub c_n: f64,
    /// d_n = 2(β+1)(β+3)
    pub d_n: f64,
    /// e_n = (2n+α+β)(n+α−1)(n+α+β+1)(n+α+β+2)
    pub e_n: f64,
    /// Coefficients [a0, a1] of the multiplier A(x) = a0 + a1·x in `Rn2b3`.
    pub a_poly: [f64; 2],
    /// Coefficients [b0, b1, b2] of the multiplier B(x) = b0 + b1·x + b2·x² in `Rn2b4`.
    pub b_poly: [f64; 3],
}

/// Build the coefficient bundle for `relation_id` at degree `n`.
///
/// Errors with `InvalidDegree` below the relation's degree floor and with
/// `DegenerateParameters` when a shared denominator factor is within
/// `tolerance::DENOMINATOR` of zero.
pub fn mixed_relation_coeffs(
    relation_id: RelationId,
    n: usize,
    params: &ParamPair,
) -> Result<MixedRelationCoeffs> {
    let floor = relation_id.n_floor();
    if n < floor {
        return Err(Error::InvalidDegree { n, min: floor, max: usize::MAX });
    }
    let a = params.alpha;
    let b = params.beta;
    let nf = n as f64;
    let factors = scalar_factors(n, params)?;
    let n_b = guarded("n+beta", nf + b)?;
    let n_b1 = nf + b + 1.0; // guarded inside scalar_factors
    let n_ab1 = nf + a + b + 1.0; // guarded inside scalar_factors

    // A(x) multiplier of Rn2b3: n·(2(β+1)(β+2) − (n−1)(x+1)(α+n−1)) / ((β+n)(β+n+1)(α+β+n+1))
    let denom3 = n_b * n_b1 * n_ab1;
    let slope = nf * (nf - 1.0) * (a + nf - 1.0);
    let a_poly = [
        (2.0 * nf * (b + 1.0) * (b + 2.0) - slope) / denom3,
        -slope / denom3,
    ];

    // B(x) multiplier of Rn2b4, as raw polynomial coefficients.
    let b2 = (nf - 1.0) * (nf + a - 1.0) * (2.0 * nf + a + b);
    let b1 = 2.0 * (nf - 1.0) * (nf + a - 1.0) * (2.0 * nf + a + 3.0 * b + 4.0);
    let b0 = -(a * a + 5.0 * a * b + 7.0 * a + 4.0 * b * b * b + 24.0 * b * b + 39.0 * b
        - 2.0 * nf * nf * nf
        - 3.0 * a * nf * nf
        - 5.0 * b * nf * nf
        - 4.0 * nf * nf
        - a * a * nf
        - 5.0 * a * b * nf
        - 4.0 * a * nf
        + 10.0 * b * nf
        + 14.0 * nf
        + 16.0);

    Ok(MixedRelationCoeffs {
        relation_id,
        n,
        alpha: a,
        beta: b,
        a_n: factors.a_n,
        b_n: factors.b_n,
        c_n: factors.c_n,
        d_n: factors.d_n,
        e_n: factors.e_n,
        a_poly,
        b_poly: [b0, b1, b2],
    })
}

fn normalized(terms: &[f64]) -> f64 {
    let largest = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    if largest == 0.0 {
        0.0
    } else {
        terms.iter().sum::<f64>() / largest
    }
}

/// Evaluate the relation's signed terms at `x` and return their sum divided
/// by the largest term magnitude (zero when every term vanishes).
pub fn mixed_relation_residual(
    relation_id: RelationId,
    n: usize,
    params: &ParamPair,
    x: f64,
) -> Result<f64> {
    let co = mixed_relation_coeffs(relation_id, n, params)?;
    let a = params.alpha;
    let b = params.beta;
    let nf = n as f64;
    // Family member at degree `deg` with β shifted by `shift`.  The forward
    // recurrence is far better conditioned than the finite sum at large
    // degree (the sum's terms can dwarf the value by ~1e8), so prefer it and
    // fall back to the compensated sum only where its denominators vanish.
    let p = |deg: usize, shift: f64| -> Result<f64> {
        let member = params.shift_beta(shift)?;
        match eval_recurrence(deg, &member, x) {
            Ok(v) => Ok(v),
            Err(Error::DegenerateParameters { .. }) => eval_sum_compensated(deg, &member, x),
            Err(e) => Err(e),
        }
    };

    let terms: [f64; 3] = match relation_id {
        RelationId::R217 => {
            let (k1, k2, k3, k4) = k_constants(n, params);
            [
                k4 * p(n, 0.0)?,
                (1.0 + x) * k3 * p(n - 2, 1.0)?,
                (k1 - (x + 1.0) * k2) * p(n - 1, 0.0)?,
            ]
        }
        RelationId::Rfo => [
            (x + 1.0) * (a + b + nf + 1.0) * p(n - 1, 2.0)?,
            -2.0 * nf * p(n, 0.0)?,
            -2.0 * (b + 1.0) * p(n - 1, 1.0)?,
        ],
        RelationId::Rn2b2 => {
            let two_n_ab = guarded("2n+alpha+beta", 2.0 * nf + a + b)?;
            [
                (b + nf) / (2.0 * nf) * (x + 1.0 - co.a_n) * p(n - 1, 0.0)?,
                -(x + 1.0).powi(2) * (a + nf - 1.0) / (4.0 * nf) * p(n - 2, 2.0)?,
                -(b + 1.0) / two_n_ab * p(n, 0.0)?,
            ]
        }
        RelationId::Rn2b3 => {
            let n_b = guarded("n+beta", nf + b)?;
            let n_b1 = guarded("n+beta+1", nf + b + 1.0)?;
            [
                (x + co.b_n) * p(n - 1, 0.0)?,
                -(co.a_poly[0] + co.a_poly[1] * x) * p(n, 0.0)?,
                -(x + 1.0).powi(3) * (a + nf - 1.0) * (2.0 * nf + a + b) / (4.0 * n_b * n_b1)
                    * p(n - 2, 3.0)?,
            ]
        }
        RelationId::Rn2b4 => {
            let n_b = guarded("n+beta", nf + b)?;
            let b2 = guarded("beta+2", b + 2.0)?;
            let bx = co.b_poly[0] + co.b_poly[1] * x + co.b_poly[2] * x * x;
            [
                (co.c_n * (x + 1.0) - co.d_n) * p(n - 1, 0.0)?,
                -(x + 1.0).powi(4) * co.e_n / (8.0 * n_b * b2) * p(n - 2, 4.0)?,
                nf * bx / (2.0 * n_b * b2) * p(n, 0.0)?,
            ]
        }
        RelationId::R51 => [
            (2.0 * (b + 1.0) + (x + 1.0) * (a + b + 2.0 * nf + 2.0)) * p(n, 1.0)?,
            -(x + 1.0) * (a + b + nf + 2.0) * p(n, 2.0)?,
            -2.0 * (b + nf + 1.0) * p(n, 0.0)?,
        ],
        RelationId::Rain => [
            0.5 * (2.0 + a + b + 2.0 * nf) * (x + 1.0) * p(n, 1.0)?,
            -(nf + 1.0) * p(n + 1, 0.0)?,
            -(1.0 + b + nf) * p(n, 0.0)?,
        ],
    };
    Ok(normalized(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quasi() -> ParamPair {
        ParamPair::new(2.35, -1.5).unwrap()
    }

    #[test]
    fn frozen_spot_residual() {
        let r = mixed_relation_residual(RelationId::R217, 5, &quasi(), 0.4).unwrap();
        assert!(r.abs() < 1e-10, "residual {r}");
    }

    #[test]
    fn all_relations_vanish_on_sample_points() {
        let params = [
            ParamPair::new(2.35, -1.5).unwrap(),
            ParamPair::new(0.93, -1.9).unwrap(),
            ParamPair::new(-0.9, -1.05).unwrap(),
            ParamPair::new(8.3, -1.55).unwrap(),
        ];
        for p in &params {
            for id in RelationId::ALL {
                for n in [id.n_floor(), 7, 15] {
                    for &x in &[-2.3, -1.0, -0.41, 0.4, 0.97, 1.8] {
                        let r = mixed_relation_residual(id, n, p, x).unwrap();
                        assert!(
                            r.abs() < tolerance::RESIDUAL_REL,
                            "{id} n={n} ({}, {}) x={x}: residual {r}",
                            p.alpha,
                            p.beta
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degree_floor_enforced() {
        let p = quasi();
        assert!(matches!(
            mixed_relation_coeffs(RelationId::R217, 2, &p),
            Err(Error::InvalidDegree { min: 3, .. })
        ));
        assert!(matches!(
            mixed_relation_coeffs(RelationId::Rain, 1, &p),
            Err(Error::InvalidDegree { min: 2, .. })
        ));
        assert!(mixed_relation_coeffs(RelationId::Rfo, 2, &p).is_ok());
    }

    #[test]
    fn degenerate_denominator_rejected() {
        // n + β = 0 exactly.
        let p = ParamPair::new(0.0, -3.0).unwrap();
        assert!(matches!(
            mixed_relation_coeffs(RelationId::R217, 3, &p),
            Err(Error::DegenerateParameters { .. })
        ));
    }

    #[test]
    fn scalar_factor_product_form() {
        let p = quasi();
        let co = mixed_relation_coeffs(RelationId::Rn2b4, 5, &p).unwrap();
        let (a, b, nf) = (p.alpha, p.beta, 5.0f64);
        let e = (2.0 * nf + a + b) * (nf + a - 1.0) * (nf + a + b + 1.0) * (nf + a + b + 2.0);
        assert!((co.e_n - e).abs() <= 1e-12 * e.abs());
        assert!((co.a_n - 2.0 * (b + 1.0) / (2.0 * nf + a + b)).abs() < 1e-15);
        assert!((co.d_n - 2.0 * (b + 1.0) * (b + 3.0)).abs() < 1e-15);
    }

    #[test]
    fn k_grouping_is_consistent() {
        // The grouped constants reproduce the R217 coefficient structure:
        // k1/k2 − 1 is the augmentation abscissa used by the interlacing
        // checks, and the grouped form must vanish like the relation itself.
        let p = ParamPair::new(0.93, -1.9).unwrap();
        for n in [3usize, 8, 14] {
            let (k1, k2, k3, k4) = k_constants(n, &p);
            for &x in &[-1.7, -0.2, 0.9] {
                let t = [
                    k4 * eval_sum_compensated(n, &p, x).unwrap(),
                    (1.0 + x) * k3
                        * eval_sum_compensated(n - 2, &p.shift_beta(1.0).unwrap(), x).unwrap(),
                    (k1 - (x + 1.0) * k2) * eval_sum_compensated(n - 1, &p, x).unwrap(),
                ];
                assert!(normalized(&t).abs() < tolerance::RESIDUAL_REL);
            }
            assert!(k1.is_finite() && k2 != 0.0);
        }
    }
}
