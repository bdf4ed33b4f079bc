//! Randomized oracle-equivalence and invariant suites behind the `verify`
//! subcommand.
//!
//! Cases are generated per index from the base seed, so results do not
//! depend on how work is distributed over threads. The optional
//! `PENNER_ENTROPY_THREADS` environment variable caps the worker count;
//! output is byte-identical at any setting.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use penner_entropy::entropy::exact_entropy;
use penner_entropy::plumbing::{build_plumbing, GradingOverride, PlumbingSpec};
use penner_entropy::trace::{enumerate_traces, geometric_shift_with_polarity, shift_of_trace};
use penner_entropy::transfer::{
    unsigned_radius_charpoly, unsigned_radius_collatz_wielandt, word_matrix, MatrixKind,
};
use penner_entropy::twist::{apply_word, count_matrix, shift_spectrum};
use penner_entropy::word::{validate_penner, Letter, Sign, TwistWord};
use penner_entropy::{Rational, ShiftExpr, Vertex};

use crate::schema::{emit_spec_file, parse_spec_file, ProblemSpec};

/// One randomized case: a plumbing, a Penner word, an arbitrary-sign
/// variant of the same vertices, and a power.
#[derive(Debug, Clone)]
pub struct RandomCase {
    pub spec: PlumbingSpec,
    pub penner_word: TwistWord,
    pub arbitrary_word: TwistWord,
    pub m: u32,
}

/// Deterministic case for an index: trees up to 7 vertices, words up to
/// length 6, powers up to 4, dimensions 3..=5.
pub fn random_case(seed: u64, index: u64) -> RandomCase {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let k = rng.gen_range(1..=7usize);
    let names: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let edges: Vec<(String, String)> = (1..k)
        .map(|i| (names[i].clone(), names[rng.gen_range(0..i)].clone()))
        .collect();
    let n = rng.gen_range(3..=5i64);
    let mut overrides = Vec::new();
    for (a, b) in &edges {
        if rng.gen_bool(0.4) {
            let s = rng.gen_range(1..=n - 1);
            let (from, to) = if rng.gen_bool(0.5) {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            };
            overrides.push(GradingOverride { from, to, s });
        }
    }
    let spec = build_plumbing(&names, &edges, n, &overrides).expect("random trees are valid");

    let length = rng.gen_range(0..=6usize);
    let inverted = rng.gen_bool(0.5);
    let mut penner_letters = Vec::with_capacity(length);
    let mut arbitrary_letters = Vec::with_capacity(length);
    for _ in 0..length {
        let vertex = spec.vertex(&names[rng.gen_range(0..k)]).unwrap();
        let mut sign = spec.bipartition().sign_of(vertex);
        if inverted {
            sign = sign.flip();
        }
        penner_letters.push(Letter { vertex, sign });
        arbitrary_letters.push(Letter {
            vertex,
            sign: if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg },
        });
    }
    RandomCase {
        spec,
        penner_word: TwistWord::new(penner_letters),
        arbitrary_word: TwistWord::new(arbitrary_letters),
        m: rng.gen_range(0..=4u32),
    }
}

fn trace_multiset(
    word: &TwistWord,
    m: u32,
    v: Vertex,
    spec: &PlumbingSpec,
) -> Result<Vec<(Vertex, ShiftExpr)>, String> {
    let expanded = word.repeat(m);
    let mut items = Vec::new();
    for trace in enumerate_traces(word, m, v, spec).map_err(|e| e.to_string())? {
        let shift = shift_of_trace(&trace, &expanded, spec).map_err(|e| e.to_string())?;
        items.push((trace.terminal(), shift));
    }
    items.sort();
    Ok(items)
}

/// (a) Rewriting and trace enumeration agree as symbolic multisets.
fn check_rewriting_vs_traces(case: &RandomCase) -> Result<(), String> {
    for word in [&case.penner_word, &case.arbitrary_word] {
        for v in case.spec.vertices() {
            let complex = apply_word(word, v, case.m, &case.spec).map_err(|e| e.to_string())?;
            let traces = trace_multiset(word, case.m, v, &case.spec)?;
            if complex.term_multiset() != traces {
                return Err(format!(
                    "term multisets differ at source {}",
                    case.spec.name(v)
                ));
            }
        }
    }
    Ok(())
}

/// (b) Count matrix equals both its own power factorization and the
/// unsigned transfer product.
fn check_count_matrix_routes(case: &RandomCase) -> Result<(), String> {
    for word in [&case.penner_word, &case.arbitrary_word] {
        let direct = count_matrix(word, case.m, &case.spec).map_err(|e| e.to_string())?;
        let step = count_matrix(word, 1, &case.spec).map_err(|e| e.to_string())?;
        if direct != step.pow(case.m) {
            return Err("count matrix does not factor through powers".into());
        }
        let transfer =
            word_matrix(word, case.m, &MatrixKind::Unsigned, &case.spec).map_err(|e| e.to_string())?;
        if transfer.as_unsigned() != Some(&direct) {
            return Err("unsigned transfer product disagrees with rewriting counts".into());
        }
    }
    Ok(())
}

/// (c) At odd n the signed matrix is the unsigned one under the fixed
/// sign pattern `(-1)^{c(v,w)}`, for powers 1..=4.
fn check_signed_sign_coherence(case: &RandomCase) -> Result<(), String> {
    let spec = &case.spec;
    let word = &case.penner_word;
    let polarity = validate_penner(word, spec)
        .map_err(|e| e.to_string())?
        .polarity
        .expect("generated words are Penner");
    let n_odd = if spec.n() % 2 != 0 { spec.n() } else { spec.n() + 1 };
    for m in 1..=4u32 {
        let signed = word_matrix(word, m, &MatrixKind::Signed { n: n_odd }, spec)
            .map_err(|e| e.to_string())?;
        let signed = signed.as_signed().unwrap().clone();
        let unsigned = word_matrix(word, m, &MatrixKind::Unsigned, spec).map_err(|e| e.to_string())?;
        let unsigned = unsigned.as_unsigned().unwrap().clone();
        if signed.abs() != unsigned {
            return Err(format!("entrywise |signed| != unsigned at m = {m}"));
        }
        for v in spec.vertices() {
            for w in spec.vertices() {
                let c = geometric_shift_with_polarity(spec, v, w, polarity)
                    .map_err(|e| e.to_string())?
                    .eval(n_odd);
                let count = BigInt::from(unsigned.get(w.index(), v.index()).clone());
                let expected = if c.rem_euclid(2) == 0 { count } else { -count };
                if signed.get(w.index(), v.index()) != &expected {
                    return Err(format!(
                        "sign pattern broken at ({}, {}), m = {m}",
                        spec.name(w),
                        spec.name(v)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// (d) Loop traces have shifts in (1-n)Z, symbolically.
fn check_loop_shifts(case: &RandomCase) -> Result<(), String> {
    let expanded = case.penner_word.repeat(case.m);
    for v in case.spec.vertices() {
        for trace in
            enumerate_traces(&case.penner_word, case.m, v, &case.spec).map_err(|e| e.to_string())?
        {
            if trace.terminal() == v {
                let shift = shift_of_trace(&trace, &expanded, &case.spec).map_err(|e| e.to_string())?;
                if shift.a != -shift.b {
                    return Err(format!(
                        "loop trace at {} has shift {} outside (1-n)Z",
                        case.spec.name(v),
                        shift
                    ));
                }
            }
        }
    }
    Ok(())
}

/// (e) Every shift spectrum is congruent mod n-1 to the polarity-matched
/// geometric baseline.
fn check_shift_residues(case: &RandomCase) -> Result<(), String> {
    let spec = &case.spec;
    let word = &case.penner_word;
    let n = spec.n();
    let polarity = validate_penner(word, spec)
        .map_err(|e| e.to_string())?
        .polarity
        .expect("generated words are Penner");
    for v in spec.vertices() {
        let complex = apply_word(word, v, case.m, spec).map_err(|e| e.to_string())?;
        for w in spec.vertices() {
            let baseline = geometric_shift_with_polarity(spec, v, w, polarity)
                .map_err(|e| e.to_string())?
                .eval(n);
            for shift in shift_spectrum(&complex, w, n) {
                if (shift - baseline).rem_euclid(n - 1) != 0 {
                    return Err(format!(
                        "shift {shift} at ({}, {}) is not congruent to {baseline} mod {}",
                        spec.name(v),
                        spec.name(w),
                        n - 1
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Weighted matrices at t = 0 equal unsigned ones entry by entry.
fn check_weighted_degeneration(case: &RandomCase) -> Result<(), String> {
    let kind = MatrixKind::Weighted {
        n: case.spec.n(),
        t: Rational::new(BigInt::from(0), BigInt::one()),
    };
    let weighted =
        word_matrix(&case.arbitrary_word, case.m, &kind, &case.spec).map_err(|e| e.to_string())?;
    let unsigned = word_matrix(&case.arbitrary_word, case.m, &MatrixKind::Unsigned, &case.spec)
        .map_err(|e| e.to_string())?;
    if &weighted.as_weighted().unwrap().totals() != unsigned.as_unsigned().unwrap() {
        return Err("weighted totals at t = 0 differ from unsigned entries".into());
    }
    Ok(())
}

/// Inversion and repetition laws, and Penner polarity behavior.
fn check_word_algebra(case: &RandomCase) -> Result<(), String> {
    let word = &case.arbitrary_word;
    if &word.invert().invert() != word {
        return Err("double inversion is not the identity".into());
    }
    let mut concat = word.repeat(2).letters().to_vec();
    concat.extend_from_slice(word.repeat(case.m).letters());
    if TwistWord::new(concat) != word.repeat(2 + case.m) {
        return Err("repetition is not additive".into());
    }
    let report = validate_penner(&case.penner_word, &case.spec).map_err(|e| e.to_string())?;
    if !report.is_penner {
        return Err("generated Penner word failed validation".into());
    }
    let inverted = validate_penner(&case.penner_word.invert(), &case.spec)
        .map_err(|e| e.to_string())?;
    if !inverted.is_penner {
        return Err("inverse of a Penner word failed validation".into());
    }
    Ok(())
}

/// Entropy is inversion-invariant within 2 tol; enclosures respect the
/// unit lower bound.
fn check_entropy_inversion(case: &RandomCase) -> Result<(), String> {
    let tol = 1e-9;
    let (radius, log) =
        exact_entropy(&case.penner_word, &case.spec, tol, false).map_err(|e| e.to_string())?;
    let (_, log_inv) = exact_entropy(&case.penner_word.invert(), &case.spec, tol, false)
        .map_err(|e| e.to_string())?;
    if (log.midpoint() - log_inv.midpoint()).abs() > 2.0 * tol {
        return Err(format!(
            "entropy changed under inversion: {} vs {}",
            log.midpoint(),
            log_inv.midpoint()
        ));
    }
    if radius.lo < Rational::one() {
        return Err("unsigned radius enclosure dipped below 1".into());
    }
    if log.lo < 0.0 {
        return Err("entropy enclosure dipped below 0".into());
    }
    Ok(())
}

/// Characteristic-polynomial and Collatz-Wielandt enclosures intersect.
fn check_radius_routes(case: &RandomCase) -> Result<(), String> {
    let matrix = word_matrix(&case.penner_word, 1, &MatrixKind::Unsigned, &case.spec)
        .map_err(|e| e.to_string())?;
    let matrix = matrix.as_unsigned().unwrap();
    let tol = Rational::new(BigInt::from(1), BigInt::from(1_000_000));
    let cp = unsigned_radius_charpoly(matrix, &tol);
    let cw = unsigned_radius_collatz_wielandt(matrix, &tol).map_err(|e| e.to_string())?;
    if !cp.intersects(&cw) {
        return Err("charpoly and Collatz-Wielandt enclosures are disjoint".into());
    }
    Ok(())
}

/// Emitted spec files parse back to the same problem.
fn check_spec_round_trip(case: &RandomCase) -> Result<(), String> {
    let problem = ProblemSpec {
        plumbing: case.spec.clone(),
        word: case.penner_word.clone(),
        metadata: Default::default(),
    };
    let emitted = emit_spec_file(&problem);
    let reparsed = parse_spec_file(emitted.as_bytes()).map_err(|e| e.to_string())?;
    if reparsed != problem {
        return Err("spec file did not round-trip".into());
    }
    Ok(())
}

type CheckFn = fn(&RandomCase) -> Result<(), String>;

/// The named checks, in report order. The `every` field thins expensive
/// checks to a subset of case indices.
const CHECKS: &[(&str, CheckFn, u64)] = &[
    ("rewriting vs trace paths (symbolic multisets)", check_rewriting_vs_traces, 1),
    ("count matrix = matrix power = transfer product", check_count_matrix_routes, 1),
    ("odd-n signed entries = sign pattern * counts", check_signed_sign_coherence, 1),
    ("loop trace shifts lie in (1-n)Z", check_loop_shifts, 1),
    ("shift spectra match geometric baseline mod n-1", check_shift_residues, 1),
    ("weighted matrices at t = 0 degenerate to unsigned", check_weighted_degeneration, 1),
    ("word algebra (inversion, repetition, polarity)", check_word_algebra, 1),
    ("entropy invariant under word inversion", check_entropy_inversion, 4),
    ("charpoly and Collatz-Wielandt enclosures intersect", check_radius_routes, 4),
    ("spec file round-trip", check_spec_round_trip, 4),
];

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: u32,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn worker_count(cases: u32) -> usize {
    let available = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let cap = std::env::var("PENNER_ENTROPY_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(available);
    cap.min(cases.max(1) as usize).max(1)
}

/// Runs every check over `cases` generated cases. Case `index` is derived
/// from `seed` alone, so the outcome is independent of threading.
pub fn run_verification(seed: u64, cases: u32) -> Vec<CheckOutcome> {
    let workers = worker_count(cases);
    // (check id, case index, message), collected in any order.
    let failures: Mutex<Vec<(usize, u64, String)>> = Mutex::new(Vec::new());
    let next = std::sync::atomic::AtomicU64::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if index >= u64::from(cases) {
                    break;
                }
                let case = random_case(seed, index);
                for (check_id, (_, check, every)) in CHECKS.iter().enumerate() {
                    if !index.is_multiple_of(*every) {
                        continue;
                    }
                    if let Err(message) = check(&case) {
                        failures
                            .lock()
                            .unwrap()
                            .push((check_id, index, message));
                    }
                }
            });
        }
    });
    let mut failures = failures.into_inner().unwrap();
    failures.sort();
    CHECKS
        .iter()
        .enumerate()
        .map(|(check_id, (name, _, every))| CheckOutcome {
            name: (*name).to_string(),
            cases: (0..u64::from(cases)).filter(|i| i % every == 0).count() as u32,
            failures: failures
                .iter()
                .filter(|(id, _, _)| *id == check_id)
                .map(|(_, index, message)| format!("case {index}: {message}"))
                .collect(),
        })
        .collect()
}

/// Runs the per-case checks once against a user-provided problem.
pub fn run_single(problem: &ProblemSpec, m: u32) -> Vec<CheckOutcome> {
    let penner = validate_penner(&problem.word, &problem.plumbing)
        .expect("word was validated at parse time");
    let case = RandomCase {
        spec: problem.plumbing.clone(),
        penner_word: if penner.is_penner {
            problem.word.clone()
        } else {
            TwistWord::empty()
        },
        arbitrary_word: problem.word.clone(),
        m,
    };
    CHECKS
        .iter()
        .map(|(name, check, _)| CheckOutcome {
            name: (*name).to_string(),
            cases: 1,
            failures: check(&case).err().map(|m| format!("spec case: {m}")).into_iter().collect(),
        })
        .collect()
}
