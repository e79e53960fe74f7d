//! Cross-method evaluation properties over the standard parameter grid.

use qjacobi_core::eval::{eval_derivative, eval_recurrence, eval_sum, eval_sum_compensated};
use qjacobi_core::grid;
use qjacobi_core::relations::{mixed_relation_residual, RelationId};
use qjacobi_core::{tolerance, Error, ParamPair};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const X_SAMPLES: [f64; 13] = [
    -3.0, -2.4, -1.7, -1.2, -1.0, -0.6, -0.15, 0.0, 0.33, 0.71, 1.0, 1.9, 3.0,
];

/// Both evaluation routes agree to relative precision whenever the
/// recurrence route is defined.
#[test]
fn recurrence_and_sum_agree_on_grid() {
    let mut compared = 0usize;
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for n in 0..=grid::N_MAX {
            for &x in &X_SAMPLES {
                let by_sum = eval_sum_compensated(n, &params, x).unwrap();
                match eval_recurrence(n, &params, x) {
                    Ok(by_rec) => {
                        let scale = by_sum.abs().max(by_rec.abs()).max(1.0);
                        assert!(
                            (by_rec - by_sum).abs() <= tolerance::EVAL_REL * scale,
                            "mismatch at n={n} α={alpha} β={beta} x={x}: {by_rec} vs {by_sum}"
                        );
                        compared += 1;
                    }
                    Err(Error::DegenerateParameters { .. }) => {}
                    Err(e) => panic!("unexpected error at n={n} α={alpha} β={beta}: {e}"),
                }
            }
        }
    }
    assert!(compared > 5000, "too few comparable points: {compared}");
}

/// Swapping the parameters and negating the argument flips only the sign
/// parity of the degree.
#[test]
fn parameter_swap_symmetry() {
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        let swapped = ParamPair::new(beta, alpha).unwrap();
        for n in 0..=grid::N_MAX {
            let parity = if n % 2 == 0 { 1.0 } else { -1.0 };
            for &x in &X_SAMPLES {
                let lhs = eval_sum_compensated(n, &params, x).unwrap();
                let rhs = parity * eval_sum_compensated(n, &swapped, -x).unwrap();
                let scale = lhs.abs().max(rhs.abs()).max(1.0);
                assert!(
                    (lhs - rhs).abs() <= tolerance::EVAL_REL * scale,
                    "symmetry breaks at n={n} α={alpha} β={beta} x={x}: {lhs} vs {rhs}"
                );
            }
        }
    }
}

/// The closed-form derivative matches a central finite difference.
#[test]
fn derivative_matches_finite_difference() {
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for n in 1..=12 {
            for &x in &[-2.2f64, -0.7, 0.13, 0.95, 1.7] {
                let h = 1e-6 * x.abs().max(1.0);
                let fp = eval_sum_compensated(n, &params, x + h).unwrap();
                let fm = eval_sum_compensated(n, &params, x - h).unwrap();
                let fd = (fp - fm) / (2.0 * h);
                let closed = eval_derivative(n, &params, x).unwrap();
                let scale = closed.abs().max(fd.abs()).max(1.0);
                assert!(
                    (closed - fd).abs() <= tolerance::FINITE_DIFF * scale,
                    "derivative mismatch at n={n} α={alpha} β={beta} x={x}: {closed} vs {fd}"
                );
            }
        }
    }
}

/// The plain and compensated finite-sum routes agree tightly.
#[test]
fn compensation_changes_little_on_grid() {
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for n in [1, 4, 9, 16, 20] {
            for &x in &X_SAMPLES {
                let plain = eval_sum(n, &params, x).unwrap();
                let comp = eval_sum_compensated(n, &params, x).unwrap();
                let scale = plain.abs().max(comp.abs()).max(1.0);
                assert!(
                    (plain - comp).abs() <= 1e-10 * scale,
                    "sum routes disagree at n={n} α={alpha} β={beta} x={x}"
                );
            }
        }
    }
}

/// Every mixed three-term identity vanishes at seeded pseudo-random points
/// across the whole grid.
#[test]
fn relation_residuals_vanish_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a_c0b1);
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for relation in RelationId::ALL {
            let floor = relation.n_floor();
            for n in [floor, floor + 1, 5, 8, 13, 20] {
                if n < floor {
                    continue;
                }
                for _ in 0..100 {
                    let x: f64 = rng.gen_range(-3.0..3.0);
                    let r = mixed_relation_residual(relation, n, &params, x).unwrap();
                    assert!(
                        r.abs() < tolerance::RESIDUAL_REL,
                        "{relation} residual {r:.3e} at n={n} α={alpha} β={beta} x={x}"
                    );
                }
            }
        }
    }
}
