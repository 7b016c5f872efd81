//! Report documents: named checks with exact witnesses, rendered as text or JSON.

mod checks;
pub mod reference;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::filter::Fact;

pub use checks::*;

/// Identifier of the JSON layout; bumped on any incompatible change.
pub const SCHEMA: &str = "sp2g-report/1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not attempted because an earlier stage failed.
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// A comparison of two exact values. Numbers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
}

impl Witness {
    pub fn equal(label: impl Into<String>, computed: impl ToString, expected: impl ToString) -> Witness {
        let (lhs, rhs) = (computed.to_string(), expected.to_string());
        Witness { label: label.into(), holds: lhs == rhs, lhs, relation: "=".into(), rhs }
    }

    /// A reported value with nothing to compare against; `relation` and
    /// `rhs` are empty.
    pub fn value(label: impl Into<String>, value: impl ToString) -> Witness {
        Witness { label: label.into(), lhs: value.to_string(), relation: String::new(), rhs: String::new(), holds: true }
    }

    pub fn is_value(&self) -> bool {
        self.relation.is_empty()
    }
}

impl From<&Fact> for Witness {
    fn from(f: &Fact) -> Witness {
        Witness {
            label: f.label.clone(),
            lhs: f.lhs.to_string(),
            relation: f.rel.symbol().to_string(),
            rhs: f.rhs.to_string(),
            holds: f.holds(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub title: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    #[serde(default)]
    pub witnesses: Vec<Witness>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Check {
    /// Status is Pass exactly when every witness holds.
    pub fn from_witnesses(id: impl Into<String>, title: impl Into<String>, witnesses: Vec<Witness>) -> Check {
        Check {
            id: id.into(),
            title: title.into(),
            status: Status::from_bool(witnesses.iter().all(|w| w.holds)),
            citation: None,
            witnesses,
            notes: Vec::new(),
        }
    }

    pub fn with_status(mut self, status: Status) -> Check {
        self.status = status;
        self
    }

    pub fn with_citation(mut self, c: impl Into<String>) -> Check {
        self.citation = Some(c.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Check {
        self.notes.push(n.into());
        self
    }

    pub fn skipped(id: impl Into<String>, title: impl Into<String>, reason: impl Into<String>) -> Check {
        Check::from_witnesses(id, title, Vec::new()).with_status(Status::Skipped).note(reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub version: String,
    pub command: Vec<String>,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl ReportDocument {
    pub fn new(command: Vec<String>) -> ReportDocument {
        ReportDocument {
            schema: SCHEMA.into(),
            version: VERSION.into(),
            command,
            status: Status::Pass,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        if c.status != Status::Pass {
            self.status = Status::Fail;
        }
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<ReportDocument, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Text rendering. Plain values and failing comparisons are always
    /// listed; passing comparisons only with `verbose`.
    pub fn render_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "sp2g {} :: {}", self.version, self.command.join(" "));
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {}  {}", c.status.label(), c.id, c.title);
            if let Some(cite) = &c.citation {
                let _ = writeln!(out, "       rule: {cite}");
            }
            for w in c.witnesses.iter().filter(|w| verbose || !w.holds || w.is_value()) {
                let mark = if w.holds { ' ' } else { '!' };
                if w.is_value() {
                    let _ = writeln!(out, "     {mark} {}: {}", w.label, w.lhs);
                } else {
                    let _ = writeln!(out, "     {mark} {}: {} {} {}", w.label, w.lhs, w.relation, w.rhs);
                }
            }
            for n in &c.notes {
                let _ = writeln!(out, "       {n}");
            }
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        let _ = writeln!(
            out,
            "{}: {} checks, {failed} failed, {skipped} skipped",
            self.status.label(),
            self.checks.len()
        );
        out
    }
}
