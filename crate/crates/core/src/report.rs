//! Validation reports.
//!
//! Validators never panic and never stop at the first problem: they return a
//! report listing every violated axiom together with the witnessing indices,
//! so a mutated composition table names the exact triple that broke
//! associativity.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Short machine-stable rule name, e.g. `associativity`.
    pub rule: String,
    /// Human-readable witness, e.g. `triple f=2 g=4 h=1`.
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// What was validated, e.g. `category` or `descent-cone`.
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), violations: Vec::new() }
    }

    pub fn push(&mut self, rule: &str, witness: impl fmt::Display) {
        self.violations.push(Violation { rule: rule.to_string(), witness: witness.to_string() });
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    /// One-line summary for error messages.
    pub fn summary(&self) -> String {
        if self.is_clean() {
            format!("{}: clean", self.subject)
        } else {
            let head: Vec<String> = self
                .violations
                .iter()
                .take(3)
                .map(|v| format!("{} ({})", v.rule, v.witness))
                .collect();
            format!("{}: {} violation(s): {}", self.subject, self.violations.len(), head.join("; "))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary())
    }
}
