//! Verdicts and the report envelope shared by all probes.

use serde::{Deserialize, Serialize};

/// Outcome of a check. `Inconclusive` is never folded into `Pass` or `Fail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Aggregate: any inconclusive part makes the whole inconclusive, then
    /// any failure fails, otherwise pass. Empty input passes.
    pub fn combine<I: IntoIterator<Item = Verdict>>(parts: I) -> Self {
        let mut out = Verdict::Pass;
        for v in parts {
            match v {
                Verdict::Inconclusive => return Verdict::Inconclusive,
                Verdict::Fail => out = Verdict::Fail,
                Verdict::Pass => {}
            }
        }
        out
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named sub-check inside a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            verdict,
            detail: detail.into(),
        }
    }
}

/// Typed certificates produced by the probes.
pub trait Certified: Serialize {
    fn claim(&self) -> &str;
    fn verdict(&self) -> Verdict;
}

/// Structured outcome of one experiment: a claim, its verdict, the named
/// sub-checks and the certificate payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    pub measurements: serde_json::Value,
}

impl VerificationReport {
    pub fn from_certificate<C: Certified>(cert: &C, checks: Vec<Check>) -> Self {
        let parts = checks.iter().map(|c| c.verdict).chain([cert.verdict()]);
        Self {
            claim: cert.claim().to_string(),
            verdict: Verdict::combine(parts),
            checks,
            measurements: serde_json::to_value(cert).expect("certificates serialize"),
        }
    }

    /// Report for a probe that errored: the error becomes a failed check.
    pub fn from_error(claim: impl Into<String>, err: &crate::Error) -> Self {
        Self {
            claim: claim.into(),
            verdict: Verdict::Fail,
            checks: vec![Check::new("evaluation", Verdict::Fail, err.to_string())],
            measurements: serde_json::Value::Null,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_rules() {
        use Verdict::*;
        assert_eq!(Verdict::combine([]), Pass);
        assert_eq!(Verdict::combine([Pass, Pass]), Pass);
        assert_eq!(Verdict::combine([Pass, Fail]), Fail);
        assert_eq!(Verdict::combine([Fail, Inconclusive, Pass]), Inconclusive);
    }

    #[test]
    fn serializes_lowercase() {
        assert_eq!(serde_json::to_string(&Verdict::Inconclusive).unwrap(), "\"inconclusive\"");
    }
}
