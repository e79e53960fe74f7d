//! Grid-wide verification of every interlacing claim, the biconditional,
//! and the exhaustiveness of the two equal-degree branches.

use qjacobi_core::interlace::{
    check_claim, check_cor22, check_cor_noninterlace_all, check_eq45, check_lemma15, check_thm21,
    check_thm41, check_thm42, check_thm43, check_thm51, check_thm61,
};
use qjacobi_core::{askey_delta, grid, zeros_quasi, ClaimId, ParamPair};

/// Claims with no hypotheses beyond the regime must hold at every grid
/// point at or above their degree floor.
#[test]
fn unconditional_claims_hold_everywhere() {
    let mut checked = 0usize;
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for n in grid::N_MIN..=grid::N_MAX {
            let mut verdicts = vec![
                check_lemma15(n, &params).unwrap(),
                check_thm21(n, &params).unwrap(),
                check_thm43(n, &params).unwrap(),
                check_eq45(n, &params).unwrap(),
            ];
            if n >= 3 {
                verdicts.push(check_cor_noninterlace_all(n, &params).unwrap());
                for t in [2.0, 2.5, 3.0, 3.5, 4.0] {
                    verdicts.push(check_thm51(n, &params, t).unwrap());
                }
                verdicts.push(check_thm61(n, &params).unwrap());
            }
            for v in verdicts {
                assert!(
                    v.holds && v.hypothesis_met && !v.boundary,
                    "{} fails at n={n} α={alpha} β={beta}: {v:?}",
                    v.claim_id
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 2000, "grid unexpectedly small: {checked}");
}

/// The equal-degree biconditional holds at every non-boundary grid point,
/// and the grid contains no boundary points.
#[test]
fn biconditional_has_no_exceptions_on_grid() {
    let mut points = 0usize;
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for n in grid::N_MIN..=grid::N_MAX {
            let delta = askey_delta(n, &params).unwrap();
            let x2 = zeros_quasi(n, &params).unwrap().zeros[1];
            let v = check_thm41(n, &params).unwrap();
            if (delta - x2).abs() > 1e-8 {
                assert!(!v.boundary, "spurious boundary at n={n} α={alpha} β={beta}");
                assert!(v.holds, "biconditional fails at n={n} α={alpha} β={beta}: {v:?}");
                points += 1;
            }
        }
    }
    assert!(points >= 200, "need at least 200 clean grid points, got {points}");
}

/// At every grid point exactly one of the three outcomes obtains:
/// equal-degree interlacing, δ-augmented interlacing, or a boundary tie.
#[test]
fn equal_degree_branches_are_exhaustive() {
    for (alpha, beta) in grid::param_pairs() {
        let params = ParamPair::new(alpha, beta).unwrap();
        for n in grid::N_MIN..=grid::N_MAX {
            let delta = askey_delta(n, &params).unwrap();
            let x2 = zeros_quasi(n, &params).unwrap().zeros[1];
            let v41 = check_thm41(n, &params).unwrap();
            let v42 = check_thm42(n, &params).unwrap();
            let outcomes = [
                v41.holds && delta < x2,
                v42.hypothesis_met && v42.holds,
                v41.boundary,
            ];
            assert_eq!(
                outcomes.iter().filter(|b| **b).count(),
                1,
                "outcomes not exhaustive at n={n} α={alpha} β={beta}: {outcomes:?}"
            );
        }
    }
}

/// Checkers are pure: identical inputs give identical verdicts.
#[test]
fn verdicts_are_deterministic() {
    let params = ParamPair::new(0.93, -1.9).unwrap();
    let mirrored = ParamPair::new(-1.9, 0.93).unwrap();
    for claim in ClaimId::ALL {
        let p = if claim == ClaimId::Cor22 { &mirrored } else { &params };
        for n in [3usize, 7, 12] {
            let a = check_claim(claim, n, p, Some(2.5), Some(2)).unwrap();
            let b = check_claim(claim, n, p, Some(2.5), Some(2)).unwrap();
            assert_eq!(a, b, "{claim} verdict not reproducible at n={n}");
        }
    }
}

/// Structural verdict invariants hold across the whole grid and claim set.
#[test]
fn verdict_invariants_hold_on_grid() {
    for (alpha, beta) in [(0.93, -1.9), (2.35, -1.5), (-0.9, -1.05), (8.3, -1.55)] {
        let params = ParamPair::new(alpha, beta).unwrap();
        let mirrored = ParamPair::new(beta, alpha).unwrap();
        for claim in ClaimId::ALL {
            let p = if claim == ClaimId::Cor22 { &mirrored } else { &params };
            for n in 1..=grid::N_MAX {
                let v = match check_claim(claim, n, p, Some(3.5), None) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                assert_eq!(v.claim_id, claim);
                if v.holds {
                    assert!(v.hypothesis_met, "{claim} n={n}: holds without hypothesis");
                    assert!(!v.boundary, "{claim} n={n}: boundary verdict claims to hold");
                }
                if !v.holds && v.hypothesis_met && !v.boundary {
                    assert!(!v.witnesses.is_empty(), "{claim} n={n}: silent failure");
                }
            }
        }
    }
}

/// Mirrored-regime statements hold for the reflections of every grid pair.
#[test]
fn mirrored_claims_hold_for_grid_reflections() {
    for (alpha, beta) in grid::param_pairs() {
        let mirrored = ParamPair::new(beta, alpha).unwrap();
        for n in grid::N_MIN..=12 {
            let v = check_cor22(n, &mirrored).unwrap();
            assert!(v.holds, "mirrored claims fail at n={n} α={beta} β={alpha}: {v:?}");
        }
    }
}
