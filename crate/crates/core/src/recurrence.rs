//! The three-term recurrence satisfied by the family.
//!
//! With `P_0 ≡ 1` and `P_1(x) = (α+β+2)x/2 + (α−β)/2`, for n ≥ 2
//!
//! ```text
//! c_n · P_n(x) = (x − d_n) · P_{n−1}(x) − e_n · P_{n−2}(x)
//! ```
//!
//! where the coefficients below are rational in (n, α, β).  The denominator
//! factors `2n+α+β−2`, `2n+α+β−1`, `2n+α+β` and the leading factor `n+α+β`
//! must all stay away from zero; otherwise the step is degenerate (for
//! example α+β = −2 kills the n = 2 step entirely, and the whole forward
//! recurrence with it).

use crate::error::{Error, Result};
use crate::params::ParamPair;
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceCoeffs {
    pub n: usize,
    pub c_n: f64,
    pub d_n: f64,
    pub e_n: f64,
}

fn guarded(guard: &str, value: f64) -> Result<f64> {
    if value.abs() < tolerance::DENOMINATOR {
        Err(Error::degenerate(guard, value))
    } else {
        Ok(value)
    }
}

/// Coefficients of the degree-n recurrence step, n ≥ 2.
pub fn recurrence_coeffs(n: usize, params: &ParamPair) -> Result<RecurrenceCoeffs> {
    if n < 2 {
        return Err(Error::InvalidDegree { n, min: 2, max: usize::MAX });
    }
    let (a, b) = (params.alpha, params.beta);
    let nf = n as f64;
    let s = 2.0 * nf + a + b;
    let s0 = guarded(format!("2n+alpha+beta (n = {n})").as_str(), s)?;
    let s1 = guarded(format!("2n+alpha+beta-1 (n = {n})").as_str(), s - 1.0)?;
    let s2 = guarded(format!("2n+alpha+beta-2 (n = {n})").as_str(), s - 2.0)?;
    let lead = guarded(format!("n+alpha+beta (n = {n})").as_str(), nf + a + b)?;

    Ok(RecurrenceCoeffs {
        n,
        c_n: 2.0 * nf * lead / (s1 * s0),
        d_n: (b * b - a * a) / (s2 * s0),
        e_n: 2.0 * (nf + a - 1.0) * (nf + b - 1.0) / (s2 * s1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_degree_two() {
        // α = β = 0: c_2 = 2/3, d_2 = 0, e_2 = 1/3.
        let p = ParamPair::new(0.0, 0.0).unwrap();
        let c = recurrence_coeffs(2, &p).unwrap();
        assert_relative_eq!(c.c_n, 2.0 / 3.0, max_relative = 1e-15);
        assert_eq!(c.d_n, 0.0);
        assert_relative_eq!(c.e_n, 1.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn quasi_regime_triple_matches_reference() {
        // Frozen from exact rational evaluation of the closed forms.
        let p = ParamPair::new(0.93, -1.9).unwrap();
        let c = recurrence_coeffs(15, &p).unwrap();
        assert_relative_eq!(c.c_n, 0.51725987694155258, max_relative = 1e-14);
        assert_relative_eq!(c.d_n, 0.0034983647492885324, max_relative = 1e-14);
        assert_relative_eq!(c.e_n, 0.47687661956185890, max_relative = 1e-14);
    }

    #[test]
    fn degenerate_sum_rejected() {
        // α + β = −2 makes n+α+β vanish at n = 2.
        let p = ParamPair::new(-0.5, -1.5).unwrap();
        let err = recurrence_coeffs(2, &p).unwrap_err();
        assert!(matches!(err, Error::DegenerateParameters { .. }), "got {err:?}");
    }

    #[test]
    fn degree_floor() {
        let p = ParamPair::new(0.0, 0.0).unwrap();
        assert!(matches!(
            recurrence_coeffs(1, &p),
            Err(Error::InvalidDegree { n: 1, min: 2, .. })
        ));
    }
}
