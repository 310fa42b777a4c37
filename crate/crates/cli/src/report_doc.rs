//! Machine-readable report document: `{fixture, checks: [{id, pass,
//! witness?}], verdict?}`.

use serde::Serialize;

use algebroids::{AxiomViolation, ClauseStatus, Report};

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub fixture: String,
    pub checks: Vec<CheckDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

impl ReportDoc {
    pub fn new(fixture: &str) -> Self {
        ReportDoc {
            fixture: fixture.to_string(),
            checks: Vec::new(),
            verdict: None,
        }
    }

    pub fn push_violations(&mut self, suite: &str, violations: &[AxiomViolation]) {
        if violations.is_empty() {
            self.checks.push(CheckDoc {
                id: suite.to_string(),
                pass: true,
                witness: None,
            });
        } else {
            for v in violations {
                self.checks.push(CheckDoc {
                    id: v.axiom.clone(),
                    pass: false,
                    witness: Some(format!("{v}")),
                });
            }
        }
    }

    pub fn push_report(&mut self, report: &Report) {
        for c in &report.clauses {
            let witness = match (c.status, c.note.is_empty()) {
                (ClauseStatus::Skipped, true) => Some("skipped".to_string()),
                (ClauseStatus::Skipped, false) => Some(format!("skipped: {}", c.note)),
                (_, true) => None,
                (_, false) => Some(c.note.clone()),
            };
            self.checks.push(CheckDoc {
                id: c.id.clone(),
                pass: c.status != ClauseStatus::Fail,
                witness,
            });
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
