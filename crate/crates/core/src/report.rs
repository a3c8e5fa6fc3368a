//! Reproduction-report data model: one record per expectation, a summary,
//! a human-readable table and a machine-readable JSON document.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    /// Reserved for the one documented presentation-sign discrepancy: the
    /// recorded brackets differ from the recomputed ones, but an explicit
    /// isomorphism witness between the two presentations verifies.
    Flagged,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Flagged => "flagged",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub locus: String,
    pub subject: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproReport {
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl ReproReport {
    pub fn new(records: Vec<Record>) -> ReproReport {
        let summary = Summary {
            total: records.len(),
            matched: records.iter().filter(|r| r.status == Status::Match).count(),
            mismatch: records.iter().filter(|r| r.status == Status::Mismatch).count(),
            flagged: records.iter().filter(|r| r.status == Status::Flagged).count(),
        };
        ReproReport { summary, records }
    }

    /// Mismatch on any expectation means a nonzero exit; flagged does not.
    pub fn exit_code(&self) -> i32 {
        if self.summary.mismatch > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Fixed-width table, deterministic across runs.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let header = format!(
            "{:<24} {:<18} {:<30} {:<9} {}",
            "locus", "subject", "quantity", "status", "expected | computed"
        );
        out.push_str(&header);
        out.push('\n');
        out.push_str(&"-".repeat(header.len().max(100)));
        out.push('\n');
        for r in &self.records {
            out.push_str(&format!(
                "{:<24} {:<18} {:<30} {:<9} {} | {}\n",
                r.locus, r.subject, r.quantity, r.status.to_string(), r.expected, r.computed
            ));
            if let Some(note) = &r.note {
                out.push_str(&format!("{:<24} note: {}\n", "", note));
            }
        }
        out.push_str(&format!(
            "summary: {} expectations, {} match, {} mismatch, {} flagged\n",
            self.summary.total, self.summary.matched, self.summary.mismatch, self.summary.flagged
        ));
        out
    }
}
