//! Verification rows and their JSON / Markdown rendering.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "paper")]
    Paper,
    #[serde(rename = "derived")]
    Derived,
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "paper constant")]
    PaperConstant,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: Value,
    pub provenance: Provenance,
}

impl Expected {
    pub fn new(value: Value, provenance: Provenance) -> Self {
        Expected { value, provenance }
    }
}

/// One checked (or merely recorded) value.
///
/// `status` is `Pass` exactly when `computed == expected.value`; informational rows carry
/// no expected value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub anchor: String,
    pub computed: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn compare(
        claim_id: impl Into<String>,
        anchor: impl Into<String>,
        computed: Value,
        expected: Expected,
    ) -> Self {
        let status = if computed == expected.value {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim_id: claim_id.into(),
            anchor: anchor.into(),
            computed,
            expected: Some(expected),
            status,
            details: None,
            note: None,
            wall_time_ms: None,
        }
    }

    pub fn informational(
        claim_id: impl Into<String>,
        anchor: impl Into<String>,
        computed: Value,
    ) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            anchor: anchor.into(),
            computed,
            expected: None,
            status: Status::Informational,
            details: None,
            note: None,
            wall_time_ms: None,
        }
    }

    /// A value quoted from the literature and not recomputed here.
    pub fn paper_constant(claim_id: impl Into<String>, anchor: impl Into<String>, value: Value) -> Self {
        VerificationReport::informational(claim_id, anchor, value)
            .with_note("paper constant, not recomputed")
    }

    /// A module error captured as a failing row.
    pub fn error(claim_id: impl Into<String>, anchor: impl Into<String>, err: &crate::Error) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            anchor: anchor.into(),
            computed: Value::Null,
            expected: None,
            status: Status::Fail,
            details: None,
            note: Some(format!("error: {err}")),
            wall_time_ms: None,
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.wall_time_ms = Some(elapsed.as_millis() as u64);
        self
    }

    pub fn suite(&self) -> &str {
        self.claim_id.split('.').next().unwrap_or(&self.claim_id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Md,
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

pub fn emit(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => emit_json(reports),
        Format::Md => emit_markdown(reports),
    }
}

/// Pretty JSON with object keys in sorted order.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's default map is a BTreeMap, so converting through Value sorts keys
    let v = serde_json::to_value(value).expect("report values serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values print");
    s.push('\n');
    s
}

fn emit_json(reports: &[VerificationReport]) -> String {
    to_canonical_json(&reports)
}

const HEADER: &str = "| claim | status | computed | expected | provenance | anchor |\n|---|---|---|---|---|---|\n";

fn emit_markdown(reports: &[VerificationReport]) -> String {
    if reports.is_empty() {
        return HEADER.to_string();
    }
    let mut out = String::new();
    let mut current: Option<&str> = None;
    for r in reports {
        if current != Some(r.suite()) {
            if current.is_some() {
                out.push('\n');
            }
            current = Some(r.suite());
            let _ = writeln!(out, "### {}\n", r.suite());
            out.push_str(HEADER);
        }
        let (expected, provenance) = match &r.expected {
            Some(e) => (cell(&e.value), provenance_label(e.provenance).to_string()),
            None if r.note.as_deref().is_some_and(|n| n.starts_with("paper constant")) => {
                (String::new(), "paper constant".to_string())
            }
            None => (String::new(), String::new()),
        };
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Informational => "info",
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            r.claim_id,
            status,
            cell(&r.computed),
            expected,
            provenance,
            r.anchor.replace('|', "\\|")
        );
    }
    out
}

fn provenance_label(p: Provenance) -> &'static str {
    match p {
        Provenance::Paper => "paper",
        Provenance::Derived => "derived",
        Provenance::Trivial => "trivial",
        Provenance::PaperConstant => "paper constant",
    }
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    s.replace('|', "\\|")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn pass_row() -> VerificationReport {
        VerificationReport::compare(
            "demo.one",
            "anchor text",
            json!(12),
            Expected::new(json!(12), Provenance::Paper),
        )
    }

    #[test]
    fn empty_lists() {
        assert_eq!(emit(&[], Format::Json), "[]\n");
        assert_eq!(emit(&[], Format::Md), HEADER);
        assert_eq!(exit_code(&[]), 0);
    }

    #[test]
    fn status_follows_equality() {
        assert_eq!(pass_row().status, Status::Pass);
        assert_eq!(exit_code(&[pass_row()]), 0);
        let fail = VerificationReport::compare(
            "demo.two",
            "anchor",
            json!(11),
            Expected::new(json!(12), Provenance::Paper),
        );
        assert_eq!(fail.status, Status::Fail);
        assert_eq!(exit_code(&[pass_row(), fail]), 1);
    }

    #[test]
    fn json_keys_are_sorted_and_anchor_embedded() {
        let out = emit(&[pass_row()], Format::Json);
        let anchor = out.find("\"anchor\"").unwrap();
        let claim = out.find("\"claim_id\"").unwrap();
        let status = out.find("\"status\"").unwrap();
        assert!(anchor < claim && claim < status);
        assert!(out.contains("anchor text"));
        assert!(!out.contains("wall_time_ms"));
    }

    #[test]
    fn markdown_groups_by_suite() {
        let mut other = pass_row();
        other.claim_id = "second.x".into();
        let md = emit(&[pass_row(), other], Format::Md);
        assert!(md.contains("### demo"));
        assert!(md.contains("### second"));
        assert!(md.contains("anchor text"));
    }
}
