//! Numerical toolkit for Jacobi polynomials `P_n^(α,β)` in the order-1
//! quasi-orthogonal regime `α > −1`, `−2 < β < −1`.
//!
//! In that regime the degree-`n` polynomial keeps `n − 1` simple zeros inside
//! `(−1, 1)` and pushes exactly one zero below `−1`.  This crate provides
//!
//! * evaluation by forward recurrence and by an independent finite-sum route
//!   ([`eval`]),
//! * all `n` real zeros, including the outer one, with certified residuals
//!   ([`zeros`]),
//! * sharp lower/upper bounds for the outer zero and the Askey-type threshold
//!   `δ` ([`zeros::bounds`]),
//! * mixed three-term relations connecting parameter-shifted families with
//!   machine-checkable residuals ([`relations`]),
//! * mechanical checkers for the interlacing claims that hold in this regime
//!   ([`interlace`]).
//!
//! Everything is deterministic and pure: same inputs, same outputs, no global
//! state.

pub mod error;
pub mod eval;
pub mod grid;
pub mod interlace;
pub mod params;
pub mod recurrence;
pub mod relations;
pub mod tolerance;
pub mod zeros;

pub use error::{Error, Result};
pub use eval::{eval_derivative, eval_recurrence, eval_sum, eval_sum_compensated};
pub use interlace::{
    check_claim, check_cor22, check_cor_noninterlace, check_cor_noninterlace_all, check_eq45,
    check_lemma15, check_lemma15a, check_lemma15b, check_thm21, check_thm31, check_thm41,
    check_thm42, check_thm43, check_thm51, check_thm61, coprime, interlace_consecutive,
    interlace_equal, interlace_stieltjes, ClaimId, InterlacingVerdict, Witness,
};
pub use params::{classify, reflect, ParamPair, Regime};
pub use recurrence::{recurrence_coeffs, RecurrenceCoeffs};
pub use relations::{mixed_relation_coeffs, mixed_relation_residual, MixedRelationCoeffs, RelationId};
pub use zeros::bounds::{askey_delta, bound_chain, BoundChain};
pub use zeros::{oracle_zeros, refine_zero, solve_zeros, zeros_orthogonal, zeros_quasi, SolveMethod, ZeroSet};
