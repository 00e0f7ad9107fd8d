//! Scenario reports: a verdict line per scenario followed by detail lines
//! and certificate blocks.
//!
//! ```text
//! RESULT <scenario> <PASS|FAIL|UNDECIDED>
//! <detail or certificate lines>
//! ```

use std::fmt;
use std::time::Duration;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Undecided,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        })
    }
}

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const UNDECIDED: i32 = 2;
    pub const USAGE: i32 = 64;
}

#[derive(Clone, Debug)]
pub struct ScenarioReport {
    pub name: String,
    pub status: Status,
    pub lines: Vec<String>,
    /// Certificates produced and how many re-verified independently.
    pub certificates: usize,
    pub verified: usize,
    pub elapsed: Duration,
}

impl ScenarioReport {
    pub fn new(name: &str) -> Self {
        ScenarioReport {
            name: name.to_string(),
            status: Status::Pass,
            lines: Vec::new(),
            certificates: 0,
            verified: 0,
            elapsed: Duration::ZERO,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    /// Appends a multi-line block (a certificate in one of the text formats).
    pub fn block(&mut self, text: &str) {
        self.lines.extend(text.lines().map(str::to_string));
    }

    /// Records one check; a false check fails the scenario.
    pub fn check(&mut self, what: &str, ok: bool) {
        self.line(format!("{} {what}", if ok { "ok" } else { "FAILED" }));
        if !ok {
            self.status = Status::Fail;
        }
    }

    /// Records a certificate and whether its independent re-check passed.
    pub fn certificate(&mut self, what: &str, verified: bool) {
        self.certificates += 1;
        if verified {
            self.verified += 1;
        }
        self.check(&format!("certificate re-verified: {what}"), verified);
    }

    /// Turns an error into the scenario's verdict: budget exhaustion is
    /// undecided, anything else a failure.
    pub fn error(&mut self, e: &Error) {
        self.line(format!("error: {e}"));
        self.status = self.status.max(if e.is_budget() {
            Status::Undecided
        } else {
            Status::Fail
        });
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RESULT {} {}", self.name, self.status)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        writeln!(
            f,
            "# {} of {} certificates re-verified, {:.2?}",
            self.verified, self.certificates, self.elapsed
        )
    }
}

/// 0 if every report passed, 1 if any failed, otherwise 2.
pub fn exit_code(reports: &[ScenarioReport]) -> i32 {
    match reports.iter().map(|r| r.status).max() {
        None | Some(Status::Pass) => exit::PASS,
        Some(Status::Fail) => exit::FAIL,
        Some(Status::Undecided) => exit::UNDECIDED,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_line_and_exit_codes() {
        let mut a = ScenarioReport::new("counts");
        a.check("six teams", true);
        assert!(a.to_string().starts_with("RESULT counts PASS\nok six teams\n"));
        let mut b = ScenarioReport::new("k44");
        b.error(&Error::BudgetExceeded {
            what: "triangulation".into(),
            elapsed: Duration::from_secs(1),
            nodes: 3,
        });
        assert_eq!(b.status, Status::Undecided);
        assert_eq!(exit_code(&[a.clone()]), exit::PASS);
        assert_eq!(exit_code(&[a.clone(), b.clone()]), exit::UNDECIDED);
        let mut c = ScenarioReport::new("x");
        c.check("bad", false);
        assert_eq!(exit_code(&[a, b, c]), exit::FAIL);
    }
}
