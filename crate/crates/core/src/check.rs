//! Named pass/fail records shared by the reports.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn eq<T: fmt::Display + PartialEq>(name: impl Into<String>, expected: T, actual: T) -> Check {
        Check {
            name: name.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    /// A check whose expected value is `true`.
    pub fn holds(name: impl Into<String>, ok: bool) -> Check {
        Check::eq(name, true, ok)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "ok  " } else { "FAIL" };
        write!(f, "{tag} {}: expected {}, got {}", self.name, self.expected, self.actual)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
