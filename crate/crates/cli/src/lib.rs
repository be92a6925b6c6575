//! Drives parsing, classification and validation for the `vcdim` binary.
//!
//! Every entry point returns an [`Outcome`] instead of printing, so the
//! binary stays a thin shell and tests can inspect the exact bytes.

pub mod report;

use std::fs;
use std::path::Path;

use vcdim::format::{parse_document, Document};
use vcdim::jsj::validate_jsj;
use vcdim::model::Diagnostic;
use vcdim::{decisive_clause, gdvc_corollary_geometric, gdvc_manifold, Error, PrimeSummand};

use report::{
    digest, to_json, CorpusEntry, CorpusReport, EntryStatus, JsjSummary, Problem, Report, ValidationReport, VERSION,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_SEMANTIC: u8 = 2;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Loaded {
    digest: String,
    parsed: Result<Document, Vec<Diagnostic>>,
}

fn load(path: &Path) -> Result<Loaded, Problem> {
    let bytes = fs::read(path).map_err(|e| Problem::plain("", format!("cannot read {}: {e}", path.display())))?;
    let digest = digest(&bytes);
    let parsed = match String::from_utf8(bytes) {
        Ok(text) => parse_document(&text),
        Err(_) => Err(vec![Diagnostic::at("", "input is not valid UTF-8")]),
    };
    Ok(Loaded { digest, parsed })
}

fn error_lines(path: &Path, problems: &[Problem]) -> String {
    problems.iter().map(|p| format!("error: {}: {}\n", path.display(), p.render())).collect()
}

enum Classified {
    Value { result: vcdim::DimResult, corollary: Option<u8> },
    Failed { code: u8, problems: Vec<Problem> },
}

fn classify_document(doc: &Document) -> Classified {
    match gdvc_manifold(&doc.description) {
        Ok(result) => Classified::Value { corollary: gdvc_corollary_geometric(&doc.description).ok(), result },
        Err(Error::Structural(diags)) => {
            Classified::Failed { code: EXIT_PARSE, problems: diags.iter().map(Problem::from).collect() }
        }
        Err(Error::InvalidJsj { index, diagnostics }) => Classified::Failed {
            code: EXIT_SEMANTIC,
            problems: diagnostics.iter().map(|d| Problem::from_jsj(index, d)).collect(),
        },
        Err(other) => Classified::Failed { code: EXIT_SEMANTIC, problems: vec![Problem::plain("", other.to_string())] },
    }
}

pub fn run_classify(path: &Path, json: bool, trace: bool) -> Outcome {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(p) => return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: error_lines(path, &[p]) },
    };
    let (code, report) = match loaded.parsed {
        Err(diags) => (
            EXIT_PARSE,
            Report {
                input_digest: loaded.digest,
                result: None,
                diagnostics: diags.iter().map(Problem::from).collect(),
                corollary_value: None,
                cross_check: None,
                version: VERSION,
            },
        ),
        Ok(doc) => match classify_document(&doc) {
            Classified::Value { result, corollary } => (
                EXIT_OK,
                Report {
                    input_digest: loaded.digest,
                    cross_check: corollary.map(|c| c == result.value),
                    corollary_value: corollary,
                    result: Some(result),
                    diagnostics: Vec::new(),
                    version: VERSION,
                },
            ),
            Classified::Failed { code, problems } => (
                code,
                Report {
                    input_digest: loaded.digest,
                    result: None,
                    diagnostics: problems,
                    corollary_value: None,
                    cross_check: None,
                    version: VERSION,
                },
            ),
        },
    };

    let stderr = error_lines(path, &report.diagnostics);
    let stdout = if json {
        to_json(&report)
    } else if let Some(result) = &report.result {
        let mut out = format!("gdvc = {}\n", result.value);
        if trace {
            for j in &result.trace {
                out.push_str(&format!("  [{}] {}\n", j.rule, j.clause));
            }
            match (report.corollary_value, report.cross_check) {
                (Some(c), Some(true)) => out.push_str(&format!("  cross-check: geometric route also gives {c}\n")),
                (Some(c), _) => out.push_str(&format!("  cross-check: MISMATCH, geometric route gives {c}\n")),
                (None, _) => out.push_str("  cross-check: unavailable\n"),
            }
        }
        out
    } else {
        String::new()
    };
    Outcome { code, stdout, stderr }
}

pub fn run_validate(path: &Path, json: bool) -> Outcome {
    let loaded = match load(path) {
        Ok(l) => l,
        Err(p) => return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: error_lines(path, &[p]) },
    };
    let mut report = ValidationReport {
        input_digest: loaded.digest,
        valid: false,
        diagnostics: Vec::new(),
        jsj: Vec::new(),
        version: VERSION,
    };
    let code = match loaded.parsed {
        Err(diags) => {
            report.diagnostics = diags.iter().map(Problem::from).collect();
            EXIT_PARSE
        }
        Ok(doc) => {
            for (i, s) in doc.description.summands.iter().enumerate() {
                if let PrimeSummand::Jsj { graph } = s {
                    let verdict = validate_jsj(graph);
                    report.diagnostics.extend(verdict.diagnostics.iter().map(|d| Problem::from_jsj(i, d)));
                    report.jsj.push(JsjSummary {
                        summand: i,
                        valid: verdict.valid,
                        acylindricity_constant: verdict.acylindricity_constant,
                        redirect: verdict.redirect,
                    });
                }
            }
            report.valid = report.diagnostics.is_empty();
            if report.valid {
                EXIT_OK
            } else {
                EXIT_SEMANTIC
            }
        }
    };

    let mut stderr = error_lines(path, &report.diagnostics);
    for s in report.jsj.iter().filter(|s| s.redirect.is_some()) {
        if let Some(r) = s.redirect {
            stderr.push_str(&format!("hint: {}: summand {}: {r}\n", path.display(), s.summand));
        }
    }
    let stdout = if json {
        to_json(&report)
    } else if report.valid {
        let mut out = String::from("valid\n");
        for s in &report.jsj {
            if let Some(k) = s.acylindricity_constant {
                out.push_str(&format!("summand {}: acylindrical, k = {k}\n", s.summand));
            }
        }
        out
    } else {
        String::new()
    };
    Outcome { code, stdout, stderr }
}

pub fn run_corpus(dir: &Path, json: bool) -> Outcome {
    let mut files: Vec<_> = match fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
            .collect(),
        Err(e) => {
            return Outcome {
                code: EXIT_PARSE,
                stdout: String::new(),
                stderr: format!("error: cannot read directory {}: {e}\n", dir.display()),
            }
        }
    };
    files.sort();

    let mut code = EXIT_OK;
    let mut stderr = String::new();
    let mut entries = Vec::with_capacity(files.len());
    for path in &files {
        let file = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let mut entry = CorpusEntry {
            file,
            input_digest: String::new(),
            status: EntryStatus::Error,
            value: None,
            clause: None,
            expected: None,
            cross_check: None,
            diagnostics: Vec::new(),
        };
        match load(path) {
            Err(p) => {
                entry.diagnostics.push(p);
                code = EXIT_PARSE;
            }
            Ok(loaded) => {
                entry.input_digest = loaded.digest;
                match loaded.parsed {
                    Err(diags) => {
                        entry.diagnostics = diags.iter().map(Problem::from).collect();
                        code = EXIT_PARSE;
                    }
                    Ok(doc) => {
                        entry.expected = doc.expected.clone();
                        match classify_document(&doc) {
                            Classified::Value { result, corollary } => {
                                let clause = decisive_clause(&result).map(str::to_string);
                                entry.cross_check = corollary.map(|c| c == result.value);
                                entry.status = match &doc.expected {
                                    None => EntryStatus::Unchecked,
                                    Some(e)
                                        if e.gdvc == result.value
                                            && e.clause.as_ref().is_none_or(|c| Some(c) == clause.as_ref()) =>
                                    {
                                        EntryStatus::Match
                                    }
                                    Some(_) => EntryStatus::Mismatch,
                                };
                                if entry.cross_check == Some(false) {
                                    entry.status = EntryStatus::Mismatch;
                                }
                                entry.value = Some(result.value);
                                entry.clause = clause;
                            }
                            Classified::Failed { code: c, problems } => {
                                entry.diagnostics = problems;
                                if c == EXIT_PARSE {
                                    code = EXIT_PARSE;
                                }
                            }
                        }
                    }
                }
            }
        }
        // a parse failure anywhere outranks semantic failures and mismatches
        if matches!(entry.status, EntryStatus::Mismatch | EntryStatus::Error) && code == EXIT_OK {
            code = EXIT_SEMANTIC;
        }
        stderr.push_str(&error_lines(path, &entry.diagnostics));
        entries.push(entry);
    }

    let report = CorpusReport {
        matched: entries.iter().filter(|e| e.status == EntryStatus::Match).count(),
        total: entries.len(),
        entries,
        version: VERSION,
    };
    let stdout = if json {
        to_json(&report)
    } else {
        let mut out = String::new();
        for e in &report.entries {
            let status = match e.status {
                EntryStatus::Match => "ok",
                EntryStatus::Mismatch => "MISMATCH",
                EntryStatus::Unchecked => "unchecked",
                EntryStatus::Error => "error",
            };
            let value = match (e.value, &e.clause) {
                (Some(v), Some(c)) => format!("gdvc = {v} (clause {c})"),
                (Some(v), None) => format!("gdvc = {v}"),
                _ => String::new(),
            };
            let expected = match &e.expected {
                Some(x) if e.status == EntryStatus::Mismatch => format!(", expected {}", x.gdvc),
                _ => String::new(),
            };
            out.push_str(&format!("{status:<9} {}  {value}{expected}\n", e.file));
        }
        out.push_str(&format!("{}/{} match expected values\n", report.matched, report.total));
        out
    };
    Outcome { code, stdout, stderr }
}
