//! The problem-spec file format.
//!
//! Exact schema:
//!
//! ```json
//! {
//!   "tree": {"vertices": ["1","2","3"], "edges": [["1","2"],["2","3"]]},
//!   "n": 5,
//!   "grading": [{"edge": ["1","2"], "s": 1}],
//!   "word_applied_first": [{"vertex": "3", "sign": "+"}],
//!   "metadata": {"name": "example"}
//! }
//! ```
//!
//! `grading` and `metadata` are optional; unknown keys are rejected.
//! Exactly one of `word_applied_first` / `word_paper_order` must be
//! present: the first lists twists in application order, the second in
//! composition order (last-applied first) and is reversed on input. Files
//! are always emitted in the applied-first convention.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use penner_entropy::plumbing::{build_plumbing, GradingOverride, PlumbingSpec};
use penner_entropy::word::{Letter, Sign, TwistWord};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub tree: TreeFile,
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<GradingEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_applied_first: Option<Vec<LetterFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word_paper_order: Option<Vec<LetterFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingEntry {
    pub edge: (String, String),
    pub s: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LetterFile {
    pub vertex: String,
    pub sign: String,
}

/// A fully validated problem: the plumbing, the word, and free-form
/// metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub plumbing: PlumbingSpec,
    pub word: TwistWord,
    pub metadata: BTreeMap<String, String>,
}

fn parse_sign(text: &str) -> Result<Sign, CliError> {
    match text {
        "+" => Ok(Sign::Pos),
        "-" => Ok(Sign::Neg),
        other => Err(CliError::Schema(format!(
            "sign must be \"+\" or \"-\", got {other:?}"
        ))),
    }
}

/// Parses and validates a spec file.
pub fn parse_spec_file(bytes: &[u8]) -> Result<ProblemSpec, CliError> {
    let file: SpecFile = serde_json::from_slice(bytes).map_err(|e| {
        if e.classify() == serde_json::error::Category::Data {
            CliError::Schema(e.to_string())
        } else {
            CliError::Parse(e.to_string())
        }
    })?;

    let overrides: Vec<GradingOverride> = file
        .grading
        .unwrap_or_default()
        .into_iter()
        .map(|entry| GradingOverride {
            from: entry.edge.0,
            to: entry.edge.1,
            s: entry.s,
        })
        .collect();
    let plumbing = build_plumbing(&file.tree.vertices, &file.tree.edges, file.n, &overrides)?;

    let letters_file = match (file.word_applied_first, file.word_paper_order) {
        (Some(_), Some(_)) => {
            return Err(CliError::Schema(
                "exactly one of word_applied_first / word_paper_order is allowed, got both".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Schema(
                "one of word_applied_first / word_paper_order is required".into(),
            ))
        }
        (Some(applied), None) => applied,
        (None, Some(mut paper)) => {
            // Composition order lists the last-applied twist first.
            paper.reverse();
            paper
        }
    };
    let letters = letters_file
        .into_iter()
        .map(|l| {
            Ok(Letter {
                vertex: plumbing.vertex(&l.vertex)?,
                sign: parse_sign(&l.sign)?,
            })
        })
        .collect::<Result<Vec<Letter>, CliError>>()?;

    Ok(ProblemSpec {
        plumbing,
        word: TwistWord::new(letters),
        metadata: file.metadata.unwrap_or_default(),
    })
}

/// Canonical emission: sorted vertices, canonical edges, the full grading
/// table, and the word in applied-first order.
pub fn to_spec_file(problem: &ProblemSpec) -> SpecFile {
    let plumbing = &problem.plumbing;
    let vertices: Vec<String> = plumbing
        .vertices()
        .map(|v| plumbing.name(v).to_string())
        .collect();
    let edges: Vec<(String, String)> = plumbing
        .tree()
        .edges()
        .map(|(v, w)| (plumbing.name(v).to_string(), plumbing.name(w).to_string()))
        .collect();
    let grading: Vec<GradingEntry> = plumbing
        .tree()
        .edges()
        .map(|(v, w)| GradingEntry {
            edge: (plumbing.name(v).to_string(), plumbing.name(w).to_string()),
            s: plumbing.s(v, w).unwrap().eval(plumbing.n()),
        })
        .collect();
    let word: Vec<LetterFile> = problem
        .word
        .letters()
        .iter()
        .map(|l| LetterFile {
            vertex: plumbing.name(l.vertex).to_string(),
            sign: l.sign.symbol().to_string(),
        })
        .collect();
    SpecFile {
        tree: TreeFile { vertices, edges },
        n: plumbing.n(),
        grading: Some(grading),
        word_applied_first: Some(word),
        word_paper_order: None,
        metadata: if problem.metadata.is_empty() {
            None
        } else {
            Some(problem.metadata.clone())
        },
    }
}

pub fn emit_spec_file(problem: &ProblemSpec) -> String {
    serde_json::to_string_pretty(&to_spec_file(problem)).expect("spec files always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const A3: &str = r#"{
        "tree": {"vertices": ["1","2","3"], "edges": [["1","2"],["2","3"]]},
        "n": 5,
        "grading": [{"edge": ["1","2"], "s": 1}, {"edge": ["2","3"], "s": 1}],
        "word_applied_first": [
            {"vertex": "3", "sign": "+"},
            {"vertex": "2", "sign": "-"},
            {"vertex": "1", "sign": "+"}
        ],
        "metadata": {"name": "a3"}
    }"#;

    #[test]
    fn parses_the_a3_file() {
        let problem = parse_spec_file(A3.as_bytes()).unwrap();
        assert_eq!(problem.plumbing.n(), 5);
        assert_eq!(problem.word.len(), 3);
        let names: Vec<&str> = problem
            .word
            .letters()
            .iter()
            .map(|l| problem.plumbing.name(l.vertex))
            .collect();
        assert_eq!(names, ["3", "2", "1"]);
        assert_eq!(problem.metadata["name"], "a3");
    }

    #[test]
    fn paper_order_is_reversed() {
        let applied = parse_spec_file(A3.as_bytes()).unwrap();
        let paper = A3.replace("word_applied_first", "word_paper_order");
        let parsed = parse_spec_file(paper.as_bytes()).unwrap();
        let mut reversed = parsed.word.letters().to_vec();
        reversed.reverse();
        assert_eq!(reversed, applied.word.letters().to_vec());
    }

    #[test]
    fn rejects_bad_files() {
        // Both word keys.
        let both = A3.replace(
            "\"word_applied_first\":",
            "\"word_paper_order\": [], \"word_applied_first\":",
        );
        assert!(matches!(
            parse_spec_file(both.as_bytes()),
            Err(CliError::Schema(_))
        ));
        // Neither word key.
        let neither = r#"{"tree": {"vertices": ["a"], "edges": []}, "n": 3}"#;
        assert!(matches!(
            parse_spec_file(neither.as_bytes()),
            Err(CliError::Schema(_))
        ));
        // Unknown key.
        let unknown = A3.replace("\"metadata\"", "\"metadatum\"");
        assert!(matches!(
            parse_spec_file(unknown.as_bytes()),
            Err(CliError::Schema(_))
        ));
        // Malformed JSON.
        assert!(matches!(
            parse_spec_file(b"{not json"),
            Err(CliError::Parse(_))
        ));
        // Domain error: n too small.
        let small = A3.replace("\"n\": 5", "\"n\": 2");
        assert!(matches!(
            parse_spec_file(small.as_bytes()),
            Err(CliError::Domain(_))
        ));
        // Bad sign.
        let sign = A3.replace("\"sign\": \"-\"", "\"sign\": \"?\"");
        assert!(matches!(
            parse_spec_file(sign.as_bytes()),
            Err(CliError::Schema(_))
        ));
    }

    #[test]
    fn round_trips() {
        let problem = parse_spec_file(A3.as_bytes()).unwrap();
        let emitted = emit_spec_file(&problem);
        let reparsed = parse_spec_file(emitted.as_bytes()).unwrap();
        assert_eq!(problem, reparsed);
    }
}
