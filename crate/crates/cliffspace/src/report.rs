//! Check records shared by the verification suites and the CLI.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// One verification record. `anchor` names the identity being checked
/// (or `"plumbing"` for infrastructure checks).
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub observed: String,
    pub expected: String,
    pub anchor: String,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Report {
    pub command: String,
    pub records: Vec<CheckRecord>,
    /// Scope statements that are not themselves checks.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            records: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        status: Status,
        observed: impl Into<String>,
        expected: impl Into<String>,
        anchor: impl Into<String>,
    ) {
        self.records.push(CheckRecord {
            name: name.into(),
            status,
            observed: observed.into(),
            expected: expected.into(),
            anchor: anchor.into(),
        });
    }

    /// Push a pass/fail record.
    pub fn check(
        &mut self,
        name: impl Into<String>,
        pass: bool,
        observed: impl Into<String>,
        expected: impl Into<String>,
        anchor: impl Into<String>,
    ) {
        let status = if pass { Status::Pass } else { Status::Fail };
        self.push(name, status, observed, expected, anchor);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.records.extend(other.records);
        self.notes.extend(other.notes);
    }

    /// True when no record failed (inconclusive records do not fail).
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}
