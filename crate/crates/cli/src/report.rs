//! Machine-readable report rows with deterministic formatting.
//!
//! One [`ReportRow`] describes one claim checked at one grid point.  The same
//! field order drives both output formats: JSON lines carry shortest
//! round-trip floats, CSV carries fixed 12-significant-digit floats — both
//! formattings are deterministic, so identical invocations produce
//! byte-identical output.

use qjacobi_core::{InterlacingVerdict, Witness};
use serde::Serialize;

/// Output encodings for rows and verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// One JSON object per line, keys in struct order, shortest round-trip
    /// float representation.
    JsonLines,
    /// Comma-separated with a header row, LF line endings, `.` decimal
    /// separator, 12 significant digits.
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::JsonLines),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format '{other}' (expected json or csv)")),
        }
    }
}

/// Render a float with exactly 12 significant digits (scientific form, so
/// the digit count is independent of magnitude).
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// RFC 4180 escaping: quote the field when it contains a comma, quote, or
/// line break, doubling embedded quotes.
pub fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt_sig12(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

/// One claim checked at one grid point, with the key quantities the claim
/// talks about attached when they are defined there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    /// Claim selector string as given on the command line.
    pub claim: String,
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    /// β-shift for the shift-parameterized claims; absent elsewhere.
    pub t: Option<f64>,
    pub hypothesis_met: bool,
    pub holds: bool,
    pub boundary: bool,
    /// Threshold −1 − 2(β+1)/(α+β+2n+2), when the regime defines it.
    pub delta: Option<f64>,
    /// Smallest zero of the degree-n member.
    pub x1: Option<f64>,
    /// Second-smallest zero.
    pub x2: Option<f64>,
    pub loose_lower: Option<f64>,
    pub tight_lower: Option<f64>,
    pub upper: Option<f64>,
    pub witnesses: Vec<Witness>,
    pub notes: String,
}

impl ReportRow {
    pub const CSV_HEADER: &'static str = "claim,n,alpha,beta,t,hypothesis_met,holds,boundary,\
         delta,x1,x2,loose_lower,tight_lower,upper,witnesses,notes";

    /// A definitive failure: hypotheses held, no boundary tie, ordering broke.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.boundary && !self.holds
    }

    /// Hypotheses unmet (includes boundary ties): the claim asserts nothing.
    pub fn is_vacuous(&self) -> bool {
        !self.hypothesis_met
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report rows always serialize")
    }

    pub fn to_csv(&self) -> String {
        let witnesses =
            serde_json::to_string(&self.witnesses).expect("witnesses always serialize");
        [
            csv_escape(&self.claim),
            self.n.to_string(),
            sig12(self.alpha),
            sig12(self.beta),
            opt_sig12(self.t),
            self.hypothesis_met.to_string(),
            self.holds.to_string(),
            self.boundary.to_string(),
            opt_sig12(self.delta),
            opt_sig12(self.x1),
            opt_sig12(self.x2),
            opt_sig12(self.loose_lower),
            opt_sig12(self.tight_lower),
            opt_sig12(self.upper),
            csv_escape(&witnesses),
            csv_escape(&self.notes),
        ]
        .join(",")
    }
}

/// Fold a checker verdict into a row skeleton; the caller attaches the
/// numeric context fields afterwards.
pub fn row_from_verdict(
    claim: &str,
    n: usize,
    alpha: f64,
    beta: f64,
    t: Option<f64>,
    verdict: &InterlacingVerdict,
) -> ReportRow {
    ReportRow {
        claim: claim.to_string(),
        n,
        alpha,
        beta,
        t,
        hypothesis_met: verdict.hypothesis_met,
        holds: verdict.holds,
        boundary: verdict.boundary,
        delta: None,
        x1: None,
        x2: None,
        loose_lower: None,
        tight_lower: None,
        upper: None,
        witnesses: verdict.witnesses.clone(),
        notes: verdict.notes.clone(),
    }
}
