//! Violation records and structured pass/fail reports.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exactlin::Rat;

/// An axiom that failed at a concrete basis tuple, with both evaluated
/// sides. `lhs != rhs` always holds.
#[derive(Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    /// Stable identifier of the failed identity.
    pub axiom: String,
    /// Basis indices of the witness tuple; meaning depends on the axiom.
    pub witness: Vec<usize>,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
}

impl AxiomViolation {
    pub fn new(axiom: &str, witness: &[usize], lhs: Vec<Rat>, rhs: Vec<Rat>) -> Self {
        debug_assert_ne!(lhs, rhs, "violation with equal sides");
        AxiomViolation {
            axiom: String::from(axiom),
            witness: witness.to_vec(),
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.axiom)?;
        for (n, i) in self.witness.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "): lhs = {:?}, rhs = {:?}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClauseStatus {
    Pass,
    Fail,
    /// The clause was not applicable or could not be decided; the note says why.
    Skipped,
}

/// One named check with its outcome and a human-readable note
/// (witness, dimensions, or the reason a clause was skipped).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clause {
    pub id: String,
    pub status: ClauseStatus,
    pub note: String,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.status {
            ClauseStatus::Pass => "PASS",
            ClauseStatus::Fail => "FAIL",
            ClauseStatus::Skipped => "SKIP",
        };
        if self.note.is_empty() {
            write!(f, "{}: {}", self.id, s)
        } else {
            write!(f, "{}: {} ({})", self.id, s, self.note)
        }
    }
}

/// Ordered list of clauses produced by a verification routine.
#[derive(Clone, Default, Debug)]
pub struct Report {
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new() -> Self {
        Report {
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, id: &str, status: ClauseStatus, note: &str) {
        self.clauses.push(Clause {
            id: String::from(id),
            status,
            note: String::from(note),
        });
    }

    pub fn pass(&mut self, id: &str, note: &str) {
        self.push(id, ClauseStatus::Pass, note);
    }

    pub fn fail(&mut self, id: &str, note: &str) {
        self.push(id, ClauseStatus::Fail, note);
    }

    pub fn skip(&mut self, id: &str, note: &str) {
        self.push(id, ClauseStatus::Skipped, note);
    }

    pub fn check(&mut self, id: &str, ok: bool, note: &str) {
        self.push(
            id,
            if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            note,
        );
    }

    /// True when no clause failed (skipped clauses do not count as failures).
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != ClauseStatus::Fail)
    }

    pub fn status_of(&self, id: &str) -> Option<ClauseStatus> {
        self.clauses.iter().find(|c| c.id == id).map(|c| c.status)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
