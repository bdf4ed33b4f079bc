//! Dehn-twist words: the automorphism as an ordered list of signed letters.
//!
//! Letters are stored in application order (first-applied first), because
//! rewriting consumes them left to right. File formats that follow the
//! composition convention (last-applied first) are reversed at the IO
//! boundary, never here.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::plumbing::{PlumbingSpec, Vertex};

/// Twist direction: a positive or negative Dehn twist power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// One twist `tau_v^{+1}` or `tau_v^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub vertex: Vertex,
    pub sign: Sign,
}

/// A word of twists in application order; empty means the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistWord {
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(letters: Vec<Letter>) -> TwistWord {
        TwistWord { letters }
    }

    pub fn empty() -> TwistWord {
        TwistWord::default()
    }

    /// Build from `(vertex name, sign)` pairs in application order.
    pub fn from_named<S: AsRef<str>>(
        spec: &PlumbingSpec,
        letters: &[(S, Sign)],
    ) -> Result<TwistWord, Error> {
        let letters = letters
            .iter()
            .map(|(name, sign)| {
                Ok(Letter {
                    vertex: spec.vertex(name.as_ref())?,
                    sign: *sign,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(TwistWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group inverse: letters reversed, every sign flipped.
    pub fn invert(&self) -> TwistWord {
        TwistWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    vertex: l.vertex,
                    sign: l.sign.flip(),
                })
                .collect(),
        }
    }

    /// `m`-fold concatenation; `m = 0` is the identity word.
    pub fn repeat(&self, m: u32) -> TwistWord {
        let mut letters = Vec::with_capacity(self.letters.len() * m as usize);
        for _ in 0..m {
            letters.extend_from_slice(&self.letters);
        }
        TwistWord { letters }
    }

    /// Human-readable composition form, last-applied twist first,
    /// e.g. `t_1 o t_2^-1 o t_3`.
    pub fn display_composition(&self, spec: &PlumbingSpec) -> String {
        if self.letters.is_empty() {
            return "id".into();
        }
        let mut parts: Vec<String> = Vec::with_capacity(self.letters.len());
        for l in self.letters.iter().rev() {
            let name = spec.name(l.vertex);
            match l.sign {
                Sign::Pos => parts.push(format!("t_{name}")),
                Sign::Neg => parts.push(format!("t_{name}^-1")),
            }
        }
        parts.join(" o ")
    }
}

/// Which of the two global sign conventions a Penner word follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PennerPolarity {
    /// Positive twists on the plus class, negative on the minus class.
    Standard,
    /// The global opposite.
    Inverted,
}

/// Outcome of [`validate_penner`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PennerReport {
    pub is_penner: bool,
    /// `None` when the word is not of Penner type.
    pub polarity: Option<PennerPolarity>,
    /// Offending letters `(index, reason)` against the closer polarity.
    pub violations: Vec<(usize, String)>,
    /// Informational only: whether every vertex of the tree appears in the
    /// word. Nothing in the crate requires this.
    pub covers_all_vertices: bool,
}

/// Checks whether the word's signs factor through the bipartition in one of
/// the two polarities. The empty word is Penner with standard polarity.
pub fn validate_penner(word: &TwistWord, spec: &PlumbingSpec) -> Result<PennerReport, Error> {
    let bip = spec.bipartition();
    let mut standard_viols = Vec::new();
    let mut inverted_viols = Vec::new();
    let mut touched = alloc::vec![false; spec.vertex_count()];
    for (i, letter) in word.letters().iter().enumerate() {
        spec.check_vertex(letter.vertex)?;
        touched[letter.vertex.index()] = true;
        let class = if bip.is_plus(letter.vertex) { "V+" } else { "V-" };
        let expected = bip.sign_of(letter.vertex);
        if letter.sign != expected {
            standard_viols.push((
                i,
                format!(
                    "vertex {} in {} has sign {}",
                    spec.name(letter.vertex),
                    class,
                    letter.sign.symbol()
                ),
            ));
        }
        if letter.sign != expected.flip() {
            inverted_viols.push((
                i,
                format!(
                    "vertex {} in {} has sign {}",
                    spec.name(letter.vertex),
                    class,
                    letter.sign.symbol()
                ),
            ));
        }
    }
    let covers_all_vertices = touched.iter().all(|&t| t);
    let (is_penner, polarity, violations) = if standard_viols.is_empty() {
        (true, Some(PennerPolarity::Standard), Vec::new())
    } else if inverted_viols.is_empty() {
        (true, Some(PennerPolarity::Inverted), Vec::new())
    } else if standard_viols.len() <= inverted_viols.len() {
        (false, None, standard_viols)
    } else {
        (false, None, inverted_viols)
    };
    Ok(PennerReport {
        is_penner,
        polarity,
        violations,
        covers_all_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::build_plumbing;

    fn a3() -> PlumbingSpec {
        build_plumbing(&["1", "2", "3"], &[("1", "2"), ("2", "3")], 5, &[]).unwrap()
    }

    #[test]
    fn standard_penner_word() {
        let spec = a3();
        let word = TwistWord::from_named(
            &spec,
            &[("3", Sign::Pos), ("2", Sign::Neg), ("1", Sign::Pos)],
        )
        .unwrap();
        let report = validate_penner(&word, &spec).unwrap();
        assert!(report.is_penner);
        assert_eq!(report.polarity, Some(PennerPolarity::Standard));
        assert!(report.violations.is_empty());
        assert!(report.covers_all_vertices);
    }

    #[test]
    fn empty_word_is_penner() {
        let spec = a3();
        let report = validate_penner(&TwistWord::empty(), &spec).unwrap();
        assert!(report.is_penner);
        assert_eq!(report.polarity, Some(PennerPolarity::Standard));
        assert!(!report.covers_all_vertices);
    }

    #[test]
    fn violation_is_reported_at_the_right_index() {
        let spec = a3();
        let word =
            TwistWord::from_named(&spec, &[("3", Sign::Pos), ("2", Sign::Pos)]).unwrap();
        let report = validate_penner(&word, &spec).unwrap();
        assert!(!report.is_penner);
        assert_eq!(report.polarity, None);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].0, 1);
        assert!(!report.covers_all_vertices);
    }

    #[test]
    fn inversion_swaps_polarity() {
        let spec = a3();
        let word = TwistWord::from_named(
            &spec,
            &[("3", Sign::Pos), ("2", Sign::Neg), ("1", Sign::Pos)],
        )
        .unwrap();
        let inv = word.invert();
        assert_eq!(inv.letters().len(), 3);
        assert_eq!(inv.letters()[0].sign, Sign::Neg);
        assert_eq!(spec.name(inv.letters()[0].vertex), "1");
        let report = validate_penner(&inv, &spec).unwrap();
        assert!(report.is_penner);
        assert_eq!(report.polarity, Some(PennerPolarity::Inverted));
        assert_eq!(inv.invert(), word);
    }

    #[test]
    fn repeat_concatenates() {
        let spec = a3();
        let w = TwistWord::from_named(&spec, &[("3", Sign::Pos), ("2", Sign::Neg)]).unwrap();
        assert_eq!(w.repeat(0), TwistWord::empty());
        let w2 = w.repeat(2);
        assert_eq!(w2.len(), 4);
        assert_eq!(spec.name(w2.letters()[2].vertex), "3");
        let single = TwistWord::from_named(&spec, &[("1", Sign::Pos)]).unwrap();
        assert_eq!(single.repeat(3).len(), 3);
    }
}
