//! The standard verification grid used by the integration suites and the
//! command-line sweep defaults: a cross product of α values above −1, β values
//! inside (−2, −1), and degrees 2..=20 (clipped upward per check when a claim
//! needs a higher degree floor).

/// α values of the standard grid (all > −1).
pub const ALPHAS: [f64; 6] = [-0.9, -0.5, 0.0, 0.93, 2.35, 8.3];

/// β values of the standard grid (all inside (−2, −1)).
pub const BETAS: [f64; 4] = [-1.9, -1.55, -1.5, -1.05];

/// Smallest degree exercised by default.
pub const N_MIN: usize = 2;

/// Largest degree exercised by default.
pub const N_MAX: usize = 20;

/// Iterator over every (α, β) pair of the standard grid.
pub fn param_pairs() -> impl Iterator<Item = (f64, f64)> {
    ALPHAS
        .iter()
        .flat_map(|&a| BETAS.iter().map(move |&b| (a, b)))
}

/// Iterator over every (α, β, n) triple with n ≥ `n_floor` (and ≥ [`N_MIN`]).
pub fn triples(n_floor: usize) -> impl Iterator<Item = (f64, f64, usize)> {
    let lo = n_floor.max(N_MIN);
    param_pairs().flat_map(move |(a, b)| (lo..=N_MAX).map(move |n| (a, b, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        assert_eq!(param_pairs().count(), 24);
        assert_eq!(triples(2).count(), 24 * 19);
        assert_eq!(triples(3).count(), 24 * 18);
    }

    #[test]
    fn grid_is_regime_safe() {
        // Every pair classifies into the supported regime and stays clear of
        // the coefficient guards for all degrees on the grid.
        for (a, b) in param_pairs() {
            let p = crate::params::ParamPair::new(a, b).unwrap();
            assert_eq!(p.regime, crate::params::Regime::QuasiOrder1);
            for n in N_MIN..=N_MAX {
                let nf = n as f64;
                assert!(nf + b > 0.09, "n+β too small at ({a},{b},{n})");
                assert!(2.0 * nf + a + b > 1.1, "2n+α+β too small at ({a},{b},{n})");
            }
        }
    }
}
