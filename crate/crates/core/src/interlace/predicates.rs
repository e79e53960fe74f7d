//! Order-pattern predicates on sorted zero lists.  All comparisons are
//! strict; an exact tie makes a predicate false (or an error where the input
//! contract is violated), never silently true.

use crate::error::{Error, Result};

fn require_increasing(name: &str, v: &[f64]) -> Result<()> {
    if v.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{name} list is not strictly increasing")))
    }
}

/// Equal-length interlacing: the two sorted lists strictly alternate, in
/// either phase.  Errors with `LengthMismatch` when the lengths differ.
pub fn interlace_equal(a: &[f64], b: &[f64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    require_increasing("first", a)?;
    require_increasing("second", b)?;
    let a_first = a.iter().zip(b).all(|(x, y)| x < y)
        && b.iter().zip(&a[1..]).all(|(y, x)| y < x);
    let b_first = b.iter().zip(a).all(|(y, x)| y < x)
        && a.iter().zip(&b[1..]).all(|(x, y)| x < y);
    Ok(a_first || b_first)
}

/// Consecutive-length interlacing: `outer` has exactly one more entry than
/// `inner` and `outer[i] < inner[i] < outer[i+1]` for every i.
pub fn interlace_consecutive(outer: &[f64], inner: &[f64]) -> Result<bool> {
    if outer.len() != inner.len() + 1 {
        return Err(Error::LengthMismatch { left: outer.len(), right: inner.len() });
    }
    require_increasing("outer", outer)?;
    require_increasing("inner", inner)?;
    Ok(inner
        .iter()
        .enumerate()
        .all(|(i, &z)| outer[i] < z && z < outer[i + 1]))
}

/// One-zero-per-gap interlacing for a strictly smaller list: every entry of
/// `small` lies strictly inside the span of `big`, and no two entries of
/// `small` share a gap between consecutive entries of `big`.  Requires
/// `small.len() ≤ big.len() − 2`.
pub fn interlace_stieltjes(big: &[f64], small: &[f64]) -> Result<bool> {
    if big.len() < 2 || small.len() + 2 > big.len() {
        return Err(Error::LengthMismatch { left: big.len(), right: small.len() });
    }
    require_increasing("big", big)?;
    require_increasing("small", small)?;
    let mut last_gap = usize::MAX;
    for &s in small {
        // Strictly inside some gap (big[j], big[j+1]); a tie with any entry
        // of `big` disqualifies.
        let j = match big.iter().rposition(|&b| b < s) {
            Some(j) if j + 1 < big.len() && s < big[j + 1] => j,
            _ => return Ok(false),
        };
        if j == last_gap {
            return Ok(false);
        }
        last_gap = j;
    }
    Ok(true)
}

/// Numerical co-primality surrogate: no entry of `a` within `tol` of any
/// entry of `b`.
pub fn coprime(a: &[f64], b: &[f64], tol: f64) -> bool {
    min_pairwise_distance(a, b) > tol
}

/// Smallest |a_i − b_j| over all pairs (∞ when either list is empty).
pub(crate) fn min_pairwise_distance(a: &[f64], b: &[f64]) -> f64 {
    let mut best = f64::INFINITY;
    for &x in a {
        for &y in b {
            best = best.min((x - y).abs());
        }
    }
    best
}
