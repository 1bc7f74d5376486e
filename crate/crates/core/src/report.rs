//! Uniform check reports: every verification in the suite produces one
//! record per checked configuration, rendered either as text lines or as a
//! JSON array of `{check, case, params, verdict, details}` objects.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Skipped => write!(f, "SKIP"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub case: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub details: String,
}

impl CheckReport {
    pub fn new(check: &str, case: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            case: case.to_string(),
            params: BTreeMap::new(),
            verdict: Verdict::Skipped,
            details: String::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn pass(mut self, details: impl Into<String>) -> Self {
        self.verdict = Verdict::Pass;
        self.details = details.into();
        self
    }

    pub fn fail(mut self, details: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        self.details = details.into();
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped;
        self.details = reason.into();
        self
    }

    pub fn outcome(self, ok: bool, details: impl Into<String>) -> Self {
        if ok {
            self.pass(details)
        } else {
            self.fail(details)
        }
    }

    /// A skipped check does not count against the run.
    pub fn acceptable(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    fn params_line(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.acceptable())
}

pub fn summary_line(reports: &[CheckReport]) -> String {
    let passed = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let failed = reports.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let skipped = reports.iter().filter(|r| r.verdict == Verdict::Skipped).count();
    format!("{passed} passed, {failed} failed, {skipped} skipped")
}

pub fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let params = r.params_line();
        let head = if params.is_empty() {
            format!("{} {} [{}]", r.verdict, r.check, r.case)
        } else {
            format!("{} {} [{}] {}", r.verdict, r.check, r.case, params)
        };
        if r.details.is_empty() {
            out.push_str(&head);
        } else {
            out.push_str(&format!("{head} -- {}", r.details));
        }
        out.push('\n');
    }
    out.push_str(&summary_line(reports));
    out.push('\n');
    out
}

pub fn render_json(reports: &[CheckReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_and_verdicts() {
        let r = CheckReport::new("weight_table", "sp4_case1")
            .param("k", 2)
            .pass("14 vectors verified");
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.acceptable());
        let f = CheckReport::new("direct_sum", "so_even_case1")
            .param("k", -1)
            .fail("overlap 1");
        assert!(!f.acceptable());
        let s = CheckReport::new("direct_sum", "so_even_case2a")
            .param("k", 2)
            .skip("needs k <= 0");
        assert!(s.acceptable());
        assert!(!all_pass(&[r.clone(), f.clone()]));
        assert!(all_pass(&[r.clone(), s.clone()]));
        assert_eq!(summary_line(&[r, f, s]), "1 passed, 1 failed, 1 skipped");
    }

    #[test]
    fn json_round_trip_and_text_shape() {
        let reports = vec![
            CheckReport::new("singular_catalog", "sp4_case1")
                .param("grade", 1)
                .pass("1 found = 1 expected"),
            CheckReport::new("identity_2_12", "sp4_case3").pass("84 tuples"),
        ];
        let json = render_json(&reports);
        let back: Vec<CheckReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, reports);
        let text = render_text(&reports);
        assert!(text.contains("PASS singular_catalog [sp4_case1] grade=1"));
        assert!(text.ends_with("2 passed, 0 failed, 0 skipped\n"));
    }
}
