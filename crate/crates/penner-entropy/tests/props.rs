//! Randomized invariants: the oracle triangle between rewriting, trace
//! paths, and transfer products, plus word algebra and grading laws.

use proptest::prelude::*;

use penner_entropy::entropy::exact_entropy;
use penner_entropy::plumbing::{build_plumbing, GradingOverride, PlumbingSpec};
use penner_entropy::trace::{
    enumerate_traces, geometric_shift_with_polarity, shift_of_trace,
};
use penner_entropy::transfer::{elementary_matrix, word_matrix, MatrixKind};
use penner_entropy::twist::{apply_word, count_matrix, shift_spectrum};
use penner_entropy::word::{validate_penner, Letter, Sign, TwistWord};
use penner_entropy::{ShiftExpr, Vertex};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

#[derive(Debug, Clone)]
struct Case {
    spec: PlumbingSpec,
    penner_word: TwistWord,
    arbitrary_word: TwistWord,
    m: u32,
}

fn vertex_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

fn arb_case() -> impl Strategy<Value = Case> {
    (1usize..=7)
        .prop_flat_map(|k| {
            (
                Just(k),
                proptest::collection::vec(any::<prop::sample::Index>(), k.saturating_sub(1)),
                3i64..=5,
                proptest::collection::vec(
                    (any::<prop::sample::Index>(), any::<bool>(), any::<prop::sample::Index>()),
                    0..=3,
                ),
                any::<bool>(),
                proptest::collection::vec(
                    (any::<prop::sample::Index>(), any::<bool>()),
                    0..=6,
                ),
                0u32..=3,
            )
        })
        .prop_map(|(k, attach, n, overrides, inverted, letters, m)| {
            let names = vertex_names(k);
            let edges: Vec<(String, String)> = attach
                .iter()
                .enumerate()
                .map(|(i, idx)| (names[i + 1].clone(), names[idx.index(i + 1)].clone()))
                .collect();
            let overrides: Vec<GradingOverride> = if edges.is_empty() {
                Vec::new()
            } else {
                // At most one override per edge; duplicates would conflict.
                let mut taken = std::collections::BTreeSet::new();
                overrides
                    .iter()
                    .filter_map(|(edge_idx, flip, s_idx)| {
                        let e = edge_idx.index(edges.len());
                        if !taken.insert(e) {
                            return None;
                        }
                        let (a, b) = &edges[e];
                        let (from, to) = if *flip { (b, a) } else { (a, b) };
                        Some(GradingOverride {
                            from: from.clone(),
                            to: to.clone(),
                            s: 1 + s_idx.index((n - 1) as usize) as i64,
                        })
                    })
                    .collect()
            };
            let spec = build_plumbing(&names, &edges, n, &overrides).expect("valid random tree");
            let penner_letters: Vec<Letter> = letters
                .iter()
                .map(|(v_idx, _)| {
                    let v = spec.vertex(&names[v_idx.index(k)]).unwrap();
                    let mut sign = spec.bipartition().sign_of(v);
                    if inverted {
                        sign = sign.flip();
                    }
                    Letter { vertex: v, sign }
                })
                .collect();
            let arbitrary_letters: Vec<Letter> = letters
                .iter()
                .map(|(v_idx, pos)| Letter {
                    vertex: spec.vertex(&names[v_idx.index(k)]).unwrap(),
                    sign: if *pos { Sign::Pos } else { Sign::Neg },
                })
                .collect();
            Case {
                spec,
                penner_word: TwistWord::new(penner_letters),
                arbitrary_word: TwistWord::new(arbitrary_letters),
                m,
            }
        })
}

/// Sorted `(vertex, shift)` multiset from the trace route.
fn trace_multiset(
    word: &TwistWord,
    m: u32,
    v: Vertex,
    spec: &PlumbingSpec,
) -> Vec<(Vertex, ShiftExpr)> {
    let expanded = word.repeat(m);
    let mut items: Vec<(Vertex, ShiftExpr)> = enumerate_traces(word, m, v, spec)
        .unwrap()
        .iter()
        .map(|t| (t.terminal(), shift_of_trace(t, &expanded, spec).unwrap()))
        .collect();
    items.sort();
    items
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn grading_laws(case in arb_case()) {
        let spec = &case.spec;
        let n = spec.n();
        for (v, w) in spec.tree().edges() {
            let fwd = spec.s(v, w).unwrap();
            let bwd = spec.s(w, v).unwrap();
            prop_assert_eq!(fwd + bwd, ShiftExpr::new(0, 1)); // s(v,w) + s(w,v) = n
            for s in [fwd, bwd] {
                let value = s.eval(n);
                prop_assert!((1..=n - 1).contains(&value));
            }
            // Proper 2-coloring.
            prop_assert!(spec.bipartition().is_plus(v) != spec.bipartition().is_plus(w));
        }
    }

    #[test]
    fn geometric_path_laws(case in arb_case()) {
        let spec = &case.spec;
        for v in spec.vertices() {
            for w in spec.vertices() {
                let path = spec.geometric_path(v, w).unwrap();
                let mut reversed = spec.geometric_path(w, v).unwrap();
                reversed.reverse();
                prop_assert_eq!(&path, &reversed);
                for pair in path.windows(2) {
                    prop_assert!(spec.tree().is_edge(pair[0], pair[1]));
                }
                let mut sorted = path.clone();
                sorted.sort();
                sorted.dedup();
                prop_assert_eq!(sorted.len(), path.len()); // simple path
            }
        }
    }

    #[test]
    fn word_algebra(case in arb_case()) {
        let word = &case.arbitrary_word;
        prop_assert_eq!(&word.invert().invert(), word);
        let (a, b) = (case.m, 2u32);
        let mut concat = word.repeat(a).letters().to_vec();
        concat.extend_from_slice(word.repeat(b).letters());
        prop_assert_eq!(TwistWord::new(concat), word.repeat(a + b));

        let report = validate_penner(&case.penner_word, &case.spec).unwrap();
        prop_assert!(report.is_penner);
        let inv_report = validate_penner(&case.penner_word.invert(), &case.spec).unwrap();
        prop_assert!(inv_report.is_penner);
        if !case.penner_word.is_empty() {
            prop_assert_ne!(report.polarity, inv_report.polarity);
        }
    }

    /// Rewriting and trace enumeration produce the same symbolic multiset,
    /// for arbitrary (not only Penner) words.
    #[test]
    fn oracle_rewriting_equals_traces(case in arb_case()) {
        let spec = &case.spec;
        for word in [&case.penner_word, &case.arbitrary_word] {
            for v in spec.vertices() {
                let complex = apply_word(word, v, case.m, spec).unwrap();
                prop_assert_eq!(
                    complex.term_multiset(),
                    trace_multiset(word, case.m, v, spec)
                );
            }
        }
    }

    /// Counts factor through matrix powers and the transfer product.
    #[test]
    fn oracle_count_matrix_routes(case in arb_case()) {
        let spec = &case.spec;
        for word in [&case.penner_word, &case.arbitrary_word] {
            let direct = count_matrix(word, case.m, spec).unwrap();
            let step = count_matrix(word, 1, spec).unwrap();
            prop_assert_eq!(&direct, &step.pow(case.m));
            let transfer = word_matrix(word, case.m, &MatrixKind::Unsigned, spec).unwrap();
            prop_assert_eq!(transfer.as_unsigned().unwrap(), &direct);
            // Trace counts agree with column sums.
            for v in spec.vertices() {
                let traces = enumerate_traces(word, case.m, v, spec).unwrap();
                let column: BigUint = (0..spec.vertex_count())
                    .map(|w| direct.get(w, v.index()).clone())
                    .sum();
                prop_assert_eq!(BigUint::from(traces.len()), column);
            }
        }
    }

    /// Two-stage rewriting is identical to one-shot rewriting, traces and
    /// order included.
    #[test]
    fn staged_rewriting(case in arb_case()) {
        let spec = &case.spec;
        let word = &case.arbitrary_word;
        for v in spec.vertices().take(2) {
            let staged = {
                let mut complex = apply_word(word, v, case.m, spec).unwrap();
                for letter in word.letters() {
                    complex = complex.apply_twist(letter.vertex, letter.sign, spec).unwrap();
                }
                complex
            };
            prop_assert_eq!(staged, apply_word(word, v, case.m + 1, spec).unwrap());
        }
    }

    /// Penner-only shift laws: loop shifts lie in (1-n)Z, and every shift
    /// spectrum is congruent to the polarity-matched geometric baseline
    /// mod n-1.
    #[test]
    fn penner_shift_laws(case in arb_case()) {
        let spec = &case.spec;
        let word = &case.penner_word;
        let n = spec.n();
        let polarity = validate_penner(word, spec).unwrap().polarity.unwrap();
        let expanded = word.repeat(case.m);
        for v in spec.vertices() {
            for trace in enumerate_traces(word, case.m, v, spec).unwrap() {
                if trace.terminal() == v {
                    let shift = shift_of_trace(&trace, &expanded, spec).unwrap();
                    prop_assert_eq!(shift.a, -shift.b); // multiple of 1-n
                }
            }
            let complex = apply_word(word, v, case.m, spec).unwrap();
            for w in spec.vertices() {
                let baseline =
                    geometric_shift_with_polarity(spec, v, w, polarity).unwrap().eval(n);
                for shift in shift_spectrum(&complex, w, n) {
                    prop_assert_eq!((shift - baseline).rem_euclid(n - 1), 0);
                }
            }
        }
    }

    /// Odd-n sign coherence: the signed matrix is the unsigned one with
    /// the fixed sign pattern `(-1)^{c(v,w)}`.
    #[test]
    fn signed_odd_sign_pattern(case in arb_case()) {
        let spec = &case.spec;
        let word = &case.penner_word;
        let n_odd = if spec.n() % 2 != 0 { spec.n() } else { spec.n() + 1 };
        let polarity = validate_penner(word, spec).unwrap().polarity.unwrap();
        let m = case.m.max(1);
        let signed = word_matrix(word, m, &MatrixKind::Signed { n: n_odd }, spec).unwrap();
        let signed = signed.as_signed().unwrap();
        let unsigned = word_matrix(word, m, &MatrixKind::Unsigned, spec).unwrap();
        let unsigned = unsigned.as_unsigned().unwrap();
        prop_assert_eq!(&signed.abs(), unsigned);
        for v in spec.vertices() {
            for w in spec.vertices() {
                let c = geometric_shift_with_polarity(spec, v, w, polarity)
                    .unwrap()
                    .eval(n_odd);
                let expected = if c.rem_euclid(2) == 0 {
                    BigInt::from(unsigned.get(w.index(), v.index()).clone())
                } else {
                    -BigInt::from(unsigned.get(w.index(), v.index()).clone())
                };
                prop_assert_eq!(signed.get(w.index(), v.index()), &expected);
            }
        }
    }

    /// Weighted matrices forget to unsigned ones at t = 0, entry by entry.
    #[test]
    fn weighted_totals_match_unsigned(case in arb_case()) {
        let spec = &case.spec;
        let word = &case.arbitrary_word;
        let kind = MatrixKind::Weighted {
            n: spec.n(),
            t: penner_entropy::Rational::new(BigInt::from(0), BigInt::one()),
        };
        let weighted = word_matrix(word, case.m, &kind, spec).unwrap();
        let unsigned = word_matrix(word, case.m, &MatrixKind::Unsigned, spec).unwrap();
        prop_assert_eq!(
            &weighted.as_weighted().unwrap().totals(),
            unsigned.as_unsigned().unwrap()
        );
    }

    /// Every elementary unsigned matrix carries a unit diagonal.
    #[test]
    fn elementary_unsigned_unit_diagonal(case in arb_case()) {
        let spec = &case.spec;
        for v in spec.vertices() {
            for sign in [Sign::Pos, Sign::Neg] {
                let e = elementary_matrix(v, sign, &MatrixKind::Unsigned, spec).unwrap();
                let e = e.as_unsigned().unwrap();
                for i in 0..spec.vertex_count() {
                    prop_assert!(e.get(i, i).is_one());
                }
            }
        }
    }
}

proptest! {
    // Spectral enclosures are slower; fewer cases.
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Entropy is inversion-invariant, and enclosures respect the unit
    /// lower bound.
    #[test]
    fn entropy_inversion_symmetry(case in arb_case()) {
        let spec = &case.spec;
        let word = &case.penner_word;
        let tol = 1e-9;
        let (radius, log) = exact_entropy(word, spec, tol, false).unwrap();
        let (_, log_inv) = exact_entropy(&word.invert(), spec, tol, false).unwrap();
        prop_assert!((log.midpoint() - log_inv.midpoint()).abs() <= 2.0 * tol);
        prop_assert!(log.lo >= 0.0);
        prop_assert!(radius.lo >= penner_entropy::Rational::one());
    }

    /// The even-n signed radius never exceeds the unsigned radius
    /// (entrywise domination); it can be strictly smaller.
    #[test]
    fn even_signed_radius_bounded_by_unsigned(case in arb_case()) {
        let spec = &case.spec;
        let word = &case.penner_word;
        let n_even = if spec.n() % 2 == 0 { spec.n() } else { spec.n() + 1 };
        let tol = penner_entropy::Rational::new(
            BigInt::from(1), BigInt::from(1_000_000));
        let signed = word_matrix(word, 1, &MatrixKind::Signed { n: n_even }, spec).unwrap();
        let signed = signed.spectral_radius(&tol).unwrap();
        let unsigned = word_matrix(word, 1, &MatrixKind::Unsigned, spec).unwrap();
        let unsigned = unsigned.spectral_radius(&tol).unwrap();
        prop_assert!(signed.lo <= &unsigned.hi + &tol);
    }
}
