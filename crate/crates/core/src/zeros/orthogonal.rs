//! Eigenvalue-based zero computation for the classical orthogonal regime.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::eval::Evaluator;
use crate::params::{ParamPair, Regime};
use crate::recurrence::recurrence_coeffs;

use super::{certify, SolveMethod, ZeroSet};

/// Compute all `n` zeros (inside (−1, 1)) of an orthogonal-regime member via
/// the symmetric-tridiagonal eigenvalue method, then polish each node with a
/// single Newton step and certify.
pub fn zeros_orthogonal(n: usize, params: &ParamPair) -> Result<ZeroSet> {
    if params.regime != Regime::Orthogonal {
        return Err(Error::RegimeMismatch { expected: "orthogonal", found: params.regime });
    }
    if n < 1 {
        return Err(Error::InvalidDegree { n, min: 1, max: usize::MAX });
    }
    let (a, b) = (params.alpha, params.beta);

    // Monic-form recurrence data: diagonal entries are the x-shifts, the
    // squared off-diagonal entries are the products e_{k+1}·c_k (with the
    // degree-one normalizer c_1 = 2/(α+β+2), which keeps the product finite
    // even where the naive closed form degenerates at α+β = −1).
    let mut diag = Vec::with_capacity(n);
    diag.push((b - a) / (a + b + 2.0));
    for k in 1..n {
        diag.push(recurrence_coeffs(k + 1, params)?.d_n);
    }
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let c_k = if k == 1 { 2.0 / (a + b + 2.0) } else { recurrence_coeffs(k, params)?.c_n };
        let prod = recurrence_coeffs(k + 1, params)?.e_n * c_k;
        if !(prod > 0.0) {
            return Err(Error::ConvergenceFailure {
                what: format!("off-diagonal product at index {k} is {prod}, expected positive"),
            });
        }
        off.push(prod.sqrt());
    }

    let mut zeros: Vec<f64> = if n == 1 {
        vec![diag[0]]
    } else {
        let mat = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                diag[i]
            } else if i + 1 == j || j + 1 == i {
                off[i.min(j)]
            } else {
                0.0
            }
        });
        let eigen = mat
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect::<Vec<f64>>();
        eigen
    };
    zeros.sort_by(|x, y| x.partial_cmp(y).unwrap());

    // One Newton polish per node tightens the eigenvalues to full residual
    // accuracy; the step is microscopic so ordering is preserved.
    let ev = Evaluator::new(n, params);
    let shifted = ParamPair::new(a + 1.0, b + 1.0)?;
    let dev = Evaluator::new(n - 1, &shifted);
    let dfactor = 0.5 * (n as f64 + a + b + 1.0);
    for z in &mut zeros {
        let f = ev.eval(*z);
        let df = dfactor * dev.eval(*z);
        if df.abs() > f64::MIN_POSITIVE {
            let step = f / df;
            if step.abs() < 1e-6 {
                *z -= step;
            }
        }
    }

    certify(n, params, zeros, SolveMethod::GolubWelsch, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_small_degrees() {
        let p = ParamPair::new(0.0, 0.0).unwrap();
        let z1 = zeros_orthogonal(1, &p).unwrap();
        assert!(z1.zeros[0].abs() < 1e-14);
        let z2 = zeros_orthogonal(2, &p).unwrap();
        let r = 1.0 / 3.0f64.sqrt();
        assert!((z2.zeros[0] + r).abs() < 1e-13);
        assert!((z2.zeros[1] - r).abs() < 1e-13);
    }

    #[test]
    fn negative_unit_sum_pair_is_handled() {
        // α+β = −1 degenerates the naive normalizer ratio; the analytic
        // product form must keep working.
        let p = ParamPair::new(-0.5, -0.5).unwrap();
        let zs = zeros_orthogonal(6, &p).unwrap();
        assert_eq!(zs.zeros.len(), 6);
        // Chebyshev-type nodes: cos((2k−1)π/12), k = 6..1.
        for (i, &z) in zs.zeros.iter().enumerate() {
            let k = 6 - i;
            let expected = ((2 * k - 1) as f64 * std::f64::consts::PI / 12.0).cos();
            assert!((z - expected).abs() < 1e-12, "node {i}: {z} vs {expected}");
        }
    }

    #[test]
    fn shifted_grid_pair() {
        let p = ParamPair::new(0.93, -0.9).unwrap();
        let zs = zeros_orthogonal(15, &p).unwrap();
        assert_eq!(zs.zeros.len(), 15);
        assert!(zs.zeros.iter().all(|&z| -1.0 < z && z < 1.0));
        assert_eq!(zs.method, SolveMethod::GolubWelsch);
    }

    #[test]
    fn regime_gate() {
        let quasi = ParamPair::new(0.93, -1.9).unwrap();
        assert!(matches!(zeros_orthogonal(5, &quasi), Err(Error::RegimeMismatch { .. })));
    }
}
