//! Interlacing predicates and one executable checker per zero-location claim.
//!
//! Each checker recomputes the zero sets it needs, tests the claimed
//! ordering with strict comparisons (no epsilon inflation — ties surface,
//! they are never absorbed), and returns an [`InterlacingVerdict`] carrying
//! the outcome, whether the claim's hypotheses were satisfied by the inputs,
//! and witnesses locating any violation.

mod checks;
mod predicates;

pub use checks::{
    check_claim, check_cor22, check_cor_noninterlace, check_cor_noninterlace_all, check_eq45,
    check_lemma15, check_lemma15a, check_lemma15b, check_thm21, check_thm31, check_thm41,
    check_thm42, check_thm43, check_thm51, check_thm61,
};
pub use predicates::{coprime, interlace_consecutive, interlace_equal, interlace_stieltjes};

use crate::error::Error;

/// Identifies which claim a verdict speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    Lemma15a,
    Lemma15b,
    Thm21,
    #[serde(rename = "cor_noninterlace")]
    CorNonInterlace,
    Cor22,
    Thm31,
    Thm41,
    Thm42,
    Thm43,
    #[serde(rename = "thm51i")]
    Thm51i,
    #[serde(rename = "thm51ii")]
    Thm51ii,
    Thm61,
    Eq45,
}

impl ClaimId {
    /// Every claim, in a fixed canonical order.
    pub const ALL: [ClaimId; 13] = [
        ClaimId::Lemma15a,
        ClaimId::Lemma15b,
        ClaimId::Thm21,
        ClaimId::CorNonInterlace,
        ClaimId::Cor22,
        ClaimId::Thm31,
        ClaimId::Thm41,
        ClaimId::Thm42,
        ClaimId::Thm43,
        ClaimId::Thm51i,
        ClaimId::Thm51ii,
        ClaimId::Thm61,
        ClaimId::Eq45,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Lemma15a => "lemma15a",
            ClaimId::Lemma15b => "lemma15b",
            ClaimId::Thm21 => "thm21",
            ClaimId::CorNonInterlace => "cor_noninterlace",
            ClaimId::Cor22 => "cor22",
            ClaimId::Thm31 => "thm31",
            ClaimId::Thm41 => "thm41",
            ClaimId::Thm42 => "thm42",
            ClaimId::Thm43 => "thm43",
            ClaimId::Thm51i => "thm51i",
            ClaimId::Thm51ii => "thm51ii",
            ClaimId::Thm61 => "thm61",
            ClaimId::Eq45 => "eq45",
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown claim '{s}'")))
    }
}

/// One located fact: an interval and a distinguished point.  For violations,
/// the point that broke the claimed ordering; for supporting facts, the
/// values the claim compares.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Witness {
    pub label: String,
    pub lo: f64,
    pub hi: f64,
    pub value: f64,
}

/// Outcome of one claim check.
///
/// Invariants: `holds` implies `hypothesis_met`; a failed claim with its
/// hypotheses satisfied always carries at least one witness.  `boundary`
/// marks the near-tie band (|δ − x₂| below `tolerance::BOUNDARY`) where the
/// claim's comparison point coincides with a zero and a boolean answer would
/// be meaningless; boundary verdicts never report `holds`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct InterlacingVerdict {
    pub claim_id: ClaimId,
    pub holds: bool,
    pub hypothesis_met: bool,
    pub boundary: bool,
    pub witnesses: Vec<Witness>,
    pub notes: String,
}

impl InterlacingVerdict {
    /// A verdict whose hypotheses are not satisfied by the inputs; the claim
    /// asserts nothing there.
    pub(crate) fn vacuous(claim_id: ClaimId, notes: impl Into<String>) -> Self {
        InterlacingVerdict {
            claim_id,
            holds: false,
            hypothesis_met: false,
            boundary: false,
            witnesses: Vec::new(),
            notes: notes.into(),
        }
    }

    /// True when the verdict is a definitive failure: hypotheses held,  the
    /// comparison was not a boundary tie, and the claimed ordering broke.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.boundary && !self.holds
    }
}
