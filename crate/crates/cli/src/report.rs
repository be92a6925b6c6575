use serde::Serialize;
use sha2::{Digest, Sha256};

use vcdim::format::Expected;
use vcdim::jsj::{JsjDiagnostic, Redirect};
use vcdim::model::Diagnostic;
use vcdim::DimResult;

pub const VERSION: &str = concat!("vcdim ", env!("CARGO_PKG_VERSION"));

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// One problem found in an input, structural or semantic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Problem {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    pub location: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    pub message: String,
}

impl Problem {
    pub fn plain(location: impl Into<String>, message: impl Into<String>) -> Self {
        Problem { rule: None, location: location.into(), line: None, column: None, message: message.into() }
    }

    pub fn render(&self) -> String {
        let mut out = match (self.line, self.column) {
            (Some(l), Some(c)) => format!("line {l}, column {c}: {}", self.message),
            _ if self.location.is_empty() => self.message.clone(),
            _ => format!("{}: {}", self.location, self.message),
        };
        if let Some(rule) = &self.rule {
            out.push_str(&format!(" [{rule}]"));
        }
        out
    }

    pub fn from_jsj(summand: usize, d: &JsjDiagnostic) -> Self {
        Problem {
            rule: Some(d.rule.clone()),
            location: format!("summands[{summand}].graph: {}", d.location),
            line: None,
            column: None,
            message: d.message.clone(),
        }
    }
}

impl From<&Diagnostic> for Problem {
    fn from(d: &Diagnostic) -> Self {
        Problem { rule: None, location: d.path.clone(), line: d.line, column: d.column, message: d.message.clone() }
    }
}

/// Result of `classify`. Exactly one of `result` and `diagnostics` is
/// populated.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<DimResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Problem>,
    pub corollary_value: Option<u8>,
    pub cross_check: Option<bool>,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct JsjSummary {
    pub summand: usize,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acylindricity_constant: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub redirect: Option<Redirect>,
}

/// Result of `validate`.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub input_digest: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Problem>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub jsj: Vec<JsjSummary>,
    pub version: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Match,
    Mismatch,
    Unchecked,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub file: String,
    pub input_digest: String,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<Problem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
    pub matched: usize,
    pub total: usize,
    pub version: &'static str,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256_hex() {
        assert_eq!(digest(b""), "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn problem_rendering() {
        let p = Problem { rule: Some("Prop 8.2(e)".into()), ..Problem::plain("edges[0]", "fibers match") };
        assert_eq!(p.render(), "edges[0]: fibers match [Prop 8.2(e)]");
        let located = Problem { line: Some(3), column: Some(7), ..Problem::plain("", "expected value") };
        assert_eq!(located.render(), "line 3, column 7: expected value");
    }
}
