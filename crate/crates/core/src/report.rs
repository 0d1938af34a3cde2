//! Verification records: an ordered list of named checks, each with a
//! reference (the identity checked, or `plumbing`), a status and a detail.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::Result;
use crate::rational::{fmt_pq, Rational};
use crate::tensorspace::SparseOperator;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub reference: String,
    #[serde(flatten)]
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerificationRecord {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationRecord {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        reference: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            reference: reference.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn record(&mut self, name: &str, reference: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, reference, status, detail);
    }

    pub fn skip(&mut self, name: &str, reference: &str, reason: impl Into<String>) {
        let reason = reason.into();
        self.push(name, reference, Status::Skipped(reason.clone()), reason);
    }

    /// Records a pass/fail from a fallible computation; an error is a failure
    /// whose detail is the error message.
    pub fn record_result(&mut self, name: &str, reference: &str, outcome: Result<(bool, String)>) {
        match outcome {
            Ok((ok, detail)) => self.record(name, reference, ok, detail),
            Err(e) => self.record(name, reference, false, format!("error: {e}")),
        }
    }

    /// Exact operator equality; the detail reports the nnz of the difference.
    pub fn record_operator_eq(
        &mut self,
        name: &str,
        reference: &str,
        lhs: Result<SparseOperator>,
        rhs: Result<SparseOperator>,
    ) {
        let outcome = lhs.and_then(|l| rhs.and_then(|r| l.sub(&r))).map(|diff| {
            let ok = diff.is_zero();
            (ok, format!("residual nnz={}", diff.nnz()))
        });
        self.record_result(name, reference, outcome);
    }

    pub fn record_value_eq(&mut self, name: &str, reference: &str, got: Rational, want: Rational) {
        self.record(
            name,
            reference,
            got == want,
            format!("got={} want={}", fmt_pq(&got), fmt_pq(&want)),
        );
    }

    pub fn extend(&mut self, other: VerificationRecord) {
        self.checks.extend(other.checks);
    }

    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn count(&self, label: &str) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status.label() == label)
            .count()
    }

    /// One check per line: `<status>\t<name>\t<reference>\t<detail>`, framed
    /// by a `#` header and summary line.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.subject)?;
        for c in &self.checks {
            let mut line = String::new();
            write!(
                line,
                "{}\t{}\t{}\t{}",
                c.status.label(),
                c.name,
                c.reference,
                c.detail
            )?;
            writeln!(f, "{}", line.replace('\n', " "))?;
        }
        writeln!(
            f,
            "# pass={} fail={} skipped={}",
            self.count("pass"),
            self.count("fail"),
            self.count("skipped")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::rational::int;
    use crate::tensorspace::identity;

    #[test]
    fn text_layout() {
        let mut r = VerificationRecord::new("so(5)");
        r.record("a", "P^2 = I", true, "ok");
        r.skip("b", "plumbing", "degenerate-roots: M=6");
        r.record_value_eq("c", "tr K", int(2), int(3));
        assert_eq!(
            r.to_text(),
            "# so(5)\npass\ta\tP^2 = I\tok\nskipped\tb\tplumbing\tdegenerate-roots: M=6\n\
             fail\tc\ttr K\tgot=2/1 want=3/1\n# pass=1 fail=1 skipped=1\n"
        );
        assert!(!r.passed());
    }

    #[test]
    fn operator_equality_and_errors() {
        let mut r = VerificationRecord::new("x");
        r.record_operator_eq("same", "I = I", Ok(identity(2, 2)), Ok(identity(2, 2)));
        r.record_operator_eq(
            "err",
            "I = I",
            Err(Error::DegenerateKilling),
            Ok(identity(2, 2)),
        );
        assert_eq!(r.checks[0].status, Status::Pass);
        assert_eq!(r.checks[1].status, Status::Fail);
        assert!(r.checks[1].detail.starts_with("error:"));
    }
}
