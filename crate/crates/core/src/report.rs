//! Check records shared by the verifiers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// A computed discrepancy with a printed value; not a failure.
    Finding,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Pass, witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Fail, witness: Some(witness.into()) }
    }

    pub fn finding(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Finding, witness: Some(witness.into()) }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn expect(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Check::pass(id)
        } else {
            Check::fail(id, witness())
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.is_fail())
}

pub fn failures(checks: &[Check]) -> Vec<&Check> {
    checks.iter().filter(|c| c.is_fail()).collect()
}
