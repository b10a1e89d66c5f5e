//! Structured results for verification suites.
//!
//! A failed instance is data, not an error: suites always run to completion
//! and the caller decides what a failure means.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub check: String,
    pub args: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub instances: Vec<Instance>,
    /// Free-form remarks, e.g. whitelisted errata or "verified to order N".
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            ..Self::default()
        }
    }

    pub fn record(
        &mut self,
        check: impl Into<String>,
        args: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> bool {
        let lhs = lhs.to_string();
        let rhs = rhs.to_string();
        let passed = lhs == rhs;
        self.instances.push(Instance {
            check: check.into(),
            args: args.into(),
            lhs,
            rhs,
            passed,
        });
        passed
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.passed)
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    /// Per-check `(checked, failed)` counts in name order.
    pub fn tally(&self) -> BTreeMap<String, (usize, usize)> {
        let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for inst in &self.instances {
            let entry = out.entry(inst.check.clone()).or_default();
            entry.0 += 1;
            if !inst.passed {
                entry.1 += 1;
            }
        }
        out
    }

    pub fn absorb(&mut self, other: Report) {
        self.instances.extend(other.instances);
        self.notes.extend(other.notes);
    }
}
