//! JSON output schemas. Field order is fixed by the struct definitions,
//! maps are sorted, and all enclosures are decimal strings rounded
//! outward, so emission is byte-identical across runs. Empty fields are
//! omitted, never null.

use serde::{Deserialize, Serialize};

use penner_entropy::entropy::{EntropyReport, LogEnclosure};
use penner_entropy::plumbing::PlumbingSpec;
use penner_entropy::trace::TracePath;
use penner_entropy::transfer::{RadiusEnclosure, RadiusMethod};
use penner_entropy::twist::{CocoreComplex, Term};
use penner_entropy::word::{PennerPolarity, PennerReport, TwistWord};

use crate::numfmt::{f64_string, rational_decimal, ENCLOSURE_DIGITS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnclosureJson {
    pub lo: String,
    pub hi: String,
}

impl EnclosureJson {
    pub fn from_radius(enclosure: &RadiusEnclosure) -> Self {
        EnclosureJson {
            lo: rational_decimal(&enclosure.lo, ENCLOSURE_DIGITS, false),
            hi: rational_decimal(&enclosure.hi, ENCLOSURE_DIGITS, true),
        }
    }

    pub fn from_log(log: &LogEnclosure) -> Self {
        EnclosureJson {
            lo: f64_string(log.lo),
            hi: f64_string(log.hi),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LetterJson {
    pub vertex: String,
    pub sign: String,
}

pub fn word_json(word: &TwistWord, spec: &PlumbingSpec) -> Vec<LetterJson> {
    word.letters()
        .iter()
        .map(|l| LetterJson {
            vertex: spec.name(l.vertex).to_string(),
            sign: l.sign.symbol().to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PennerJson {
    pub is_penner: bool,
    pub polarity: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<ViolationJson>,
    pub covers_all_vertices: bool,
}

pub fn penner_json(report: &PennerReport) -> PennerJson {
    PennerJson {
        is_penner: report.is_penner,
        polarity: match report.polarity {
            Some(PennerPolarity::Standard) => "standard".into(),
            Some(PennerPolarity::Inverted) => "inverted".into(),
            None => "none".into(),
        },
        violations: report
            .violations
            .iter()
            .map(|(index, reason)| ViolationJson {
                index: *index,
                reason: reason.clone(),
            })
            .collect(),
        covers_all_vertices: report.covers_all_vertices,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub word_applied_first: Vec<LetterJson>,
    pub penner: PennerJson,
    pub bipartition_plus: Vec<String>,
    pub bipartition_minus: Vec<String>,
    pub n: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub vertex: String,
    pub shift: String,
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub source: String,
    pub power: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval_n: Option<i64>,
    pub term_count: usize,
    pub terms: Vec<TermJson>,
}

/// Reassembles the display path of a term from its provenance.
pub fn term_path(complex: &CocoreComplex, term: &Term, spec: &PlumbingSpec) -> String {
    let mut vertices = vec![complex.source()];
    let mut indices = Vec::with_capacity(term.trace.len());
    for step in &term.trace {
        vertices.push(step.vertex);
        indices.push(step.index);
    }
    TracePath::new(vertices, indices).display_paper(spec)
}

pub fn complex_json(
    complex: &CocoreComplex,
    spec: &PlumbingSpec,
    power: u32,
    eval_n: Option<i64>,
) -> ComplexJson {
    let terms = complex
        .terms()
        .iter()
        .map(|term| TermJson {
            vertex: spec.name(term.vertex).to_string(),
            shift: match eval_n {
                Some(n) => term.shift.eval(n).to_string(),
                None => term.shift.to_string(),
            },
            path: term_path(complex, term, spec),
        })
        .collect();
    ComplexJson {
        source: spec.name(complex.source()).to_string(),
        power,
        eval_n,
        term_count: complex.len(),
        terms,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathsJson {
    pub source: String,
    pub power: u32,
    pub path_count: usize,
    pub paths: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    pub power: u32,
    pub vertices: Vec<String>,
    /// Row-major entries as decimal strings (or symbolic weight sums).
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalJson {
    pub m: u32,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignedRadiusJson {
    pub n: i64,
    pub radius: EnclosureJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedJson {
    pub t: String,
    pub radius: EnclosureJson,
    pub log_radius: EnclosureJson,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyJson {
    pub word_applied_first: Vec<LetterJson>,
    pub penner: PennerJson,
    pub exact_entropy: EnclosureJson,
    pub unsigned_radius: EnclosureJson,
    pub radius_method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed_odd: Option<SignedRadiusJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed_even: Option<SignedRadiusJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub empirical: Vec<EmpiricalJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub t_weighted: Vec<WeightedJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub fn method_name(method: RadiusMethod) -> &'static str {
    match method {
        RadiusMethod::CharPoly => "charpoly",
        RadiusMethod::CollatzWielandt => "collatz_wielandt",
    }
}

pub fn entropy_json(report: &EntropyReport, spec: &PlumbingSpec) -> EntropyJson {
    EntropyJson {
        word_applied_first: word_json(&report.word, spec),
        penner: penner_json(&report.penner),
        exact_entropy: EnclosureJson::from_log(&report.exact),
        unsigned_radius: EnclosureJson::from_radius(&report.unsigned_radius),
        radius_method: method_name(report.unsigned_radius.method).to_string(),
        signed_odd: report.signed_odd.as_ref().map(|s| SignedRadiusJson {
            n: s.n,
            radius: EnclosureJson::from_radius(&s.enclosure),
        }),
        signed_even: report.signed_even.as_ref().map(|s| SignedRadiusJson {
            n: s.n,
            radius: EnclosureJson::from_radius(&s.enclosure),
        }),
        empirical: report
            .empirical
            .iter()
            .map(|(m, value)| EmpiricalJson {
                m: *m,
                value: f64_string(*value),
            })
            .collect(),
        t_weighted: report
            .t_weighted
            .iter()
            .map(|entry| WeightedJson {
                t: rational_decimal(&entry.t, ENCLOSURE_DIGITS, false),
                radius: EnclosureJson::from_radius(&entry.radius),
                log_radius: EnclosureJson::from_log(&entry.log),
                label: "EXPLORATORY".into(),
            })
            .collect(),
        notes: report.notes.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyCheckJson {
    pub name: String,
    pub cases: u32,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub seed: u64,
    pub cases: u32,
    pub all_passed: bool,
    pub checks: Vec<VerifyCheckJson>,
}
