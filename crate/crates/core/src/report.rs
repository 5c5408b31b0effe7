use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

/// Outcome of one identity check, with both sides in canonical text.
///
/// `pass` is true exactly when the two strings are equal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub n: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn compare(identity: &str, n: usize, lhs: impl Display, rhs: impl Display) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        VerifyReport {
            identity: identity.to_string(),
            n,
            params: BTreeMap::new(),
            pass: lhs == rhs,
            lhs,
            rhs,
            elapsed_ms: 0.0,
        }
    }

    /// A report for a check that could not be carried out.
    pub fn error(identity: &str, n: usize, err: impl Display) -> Self {
        let mut r = Self::compare(identity, n, format!("error: {err}"), "ok");
        r.pass = false;
        r
    }

    pub fn with_param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// One-line text rendering used by the CLI and the acceptance suite.
    pub fn line(&self) -> String {
        let mut head = format!("{} n={}", self.identity, self.n);
        for (k, v) in &self.params {
            head.push_str(&format!(" {k}={v}"));
        }
        if self.pass {
            format!("PASS {head}")
        } else {
            format!("FAIL {head}\n  lhs: {}\n  rhs: {}", self.lhs, self.rhs)
        }
    }
}

/// Runs `f`, stamping the elapsed wall time on every report it returns.
pub fn timed<F>(f: F) -> Vec<VerifyReport>
where
    F: FnOnce() -> Vec<VerifyReport>,
{
    let start = Instant::now();
    let mut reports = f();
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let share = if reports.is_empty() {
        0.0
    } else {
        ms / reports.len() as f64
    };
    for r in &mut reports {
        r.elapsed_ms = share;
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_strings_equal() {
        assert!(VerifyReport::compare("id", 1, "-1/12", "-1/12").pass);
        assert!(!VerifyReport::compare("id", 1, "-1/12", "1/12").pass);
        assert!(!VerifyReport::error("id", 0, "boom").pass);
    }
}
