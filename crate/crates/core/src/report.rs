//! Structured check verdicts: one pass/fail clause per verified identity,
//! with every nonzero residual kept alongside the inputs that witnessed it.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
        }
    }
}

/// A witnessed failure: which inputs produced which nonzero residual,
/// in canonical printed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub location: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl Clause {
    /// A clause whose status is decided by its collected witnesses.
    pub fn from_witnesses(name: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        Clause {
            name: name.into(),
            status: if witnesses.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            witnesses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub subject: String,
    pub clauses: Vec<Clause>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status == Status::Pass)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Append another report's clauses under a prefixed name.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.clauses {
            c.name = format!("{prefix}{}", c.name);
            self.clauses.push(c);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.subject)?;
        for c in &self.clauses {
            writeln!(f, "  clause {}: {}", c.name, c.status)?;
            for w in &c.witnesses {
                writeln!(f, "    witness {}: {}", w.location, w.residual)?;
            }
        }
        Ok(())
    }
}
