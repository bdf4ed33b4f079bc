//! Command-line interface for exact categorical entropy of Dehn twist
//! words on tree plumbings.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use num_traits::ToPrimitive;

use penner_entropy::entropy::{entropy_report, ReportOptions};
use penner_entropy::plumbing::PlumbingSpec;
use penner_entropy::trace::enumerate_traces;
use penner_entropy::transfer::{word_matrix, MatrixKind, TransferMatrix};
use penner_entropy::twist::apply_word;
use penner_entropy::word::validate_penner;
use penner_entropy::{Rational, Vertex};

use penner_entropy_cli::numfmt::{f64_string, parse_decimal_rational};
use penner_entropy_cli::render;
use penner_entropy_cli::report::{
    complex_json, entropy_json, penner_json, word_json, CheckJson, MatrixJson, PathsJson,
    VerifyCheckJson, VerifyJson,
};
use penner_entropy_cli::schema::{parse_spec_file, ProblemSpec};
use penner_entropy_cli::verify::{run_single, run_verification};
use penner_entropy_cli::CliError;

/// Exact categorical entropy of Dehn twist words on plumbings of sphere
/// cotangent bundles along trees.
#[derive(Parser)]
#[command(name = "penner-entropy", version)]
struct Cli {
    /// Problem spec file (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Unsigned,
    Signed,
    Weighted,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the word (Penner type) and dump the bipartition.
    Check,
    /// Term table of the rewritten cocore complex L_{m,v}.
    Complex {
        /// Source cocore vertex v.
        #[arg(long, value_name = "V")]
        cocore: String,
        /// Word power m.
        #[arg(long, value_name = "M", default_value_t = 1)]
        power: u32,
        /// Evaluate symbolic shifts at this dimension.
        #[arg(long, value_name = "N")]
        eval_n: Option<i64>,
    },
    /// Trace paths of the rewritten cocore, terminal vertex first.
    Paths {
        /// Source cocore vertex v.
        #[arg(long, value_name = "V")]
        cocore: String,
        /// Word power m.
        #[arg(long, value_name = "M", default_value_t = 1)]
        power: u32,
    },
    /// Transfer matrix of the word.
    Matrix {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Dimension for signed/weighted kinds (defaults to the spec's n).
        #[arg(long, value_name = "N")]
        n: Option<i64>,
        /// Length weight; with it, weighted entries print evaluated.
        #[arg(long, value_name = "T")]
        t: Option<String>,
        /// Word power m.
        #[arg(long, value_name = "M", default_value_t = 1)]
        power: u32,
    },
    /// Entropy report: empirical sequence, exact log-radius, parities.
    Entropy {
        /// Longest power in the empirical sequence.
        #[arg(long, value_name = "M", default_value_t = 30)]
        m_max: u32,
        /// Width bound for the entropy enclosure.
        #[arg(long, value_name = "E", default_value_t = 1e-9)]
        tol: f64,
        /// Exploratory t-weighted radii (repeatable).
        #[arg(long = "t", value_name = "T")]
        t_values: Vec<String>,
        /// Compute even for non-Penner words (heuristic output).
        #[arg(long)]
        allow_non_penner: bool,
    },
    /// Randomized oracle-equivalence and invariant suites.
    Verify {
        #[arg(long, value_name = "S", default_value_t = 42)]
        seed: u64,
        #[arg(long, value_name = "K", default_value_t = 200)]
        cases: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, code)) => {
            print!("{output}");
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}

fn load_problem(path: &Option<PathBuf>) -> Result<ProblemSpec, CliError> {
    let path = path
        .as_ref()
        .ok_or_else(|| CliError::Usage("--spec FILE is required for this command".into()))?;
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_spec_file(&bytes)
}

fn emit<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

/// Refuse to materialize complexes beyond this many terms; the counts are
/// known exactly from a cheap matrix power before any rewriting happens.
const TERM_CAP: u64 = 1_000_000;

fn checked_term_count(
    problem: &ProblemSpec,
    source: Vertex,
    power: u32,
) -> Result<u64, CliError> {
    let matrix = word_matrix(&problem.word, power, &MatrixKind::Unsigned, &problem.plumbing)?;
    let matrix = matrix.as_unsigned().expect("unsigned kind");
    let total: num_bigint::BigUint = (0..problem.plumbing.vertex_count())
        .map(|w| matrix.get(w, source.index()).clone())
        .sum();
    total
        .to_u64()
        .filter(|&t| t <= TERM_CAP)
        .ok_or_else(|| {
            CliError::Domain(format!(
                "the complex for cocore {} at power {power} has {total} terms; cap is {TERM_CAP}",
                problem.plumbing.name(source)
            ))
        })
}

fn shift_multiset_string(entry: &penner_entropy::mat::ShiftMultiset) -> String {
    if entry.is_empty() {
        return "0".into();
    }
    entry
        .iter()
        .map(|(shift, count)| {
            if count == &num_bigint::BigUint::from(1u32) {
                format!("e({shift})")
            } else {
                format!("{count}*e({shift})")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn matrix_rows(
    matrix: &TransferMatrix,
    t_eval: Option<(f64, i64)>,
) -> Vec<Vec<String>> {
    let dim = matrix.dim();
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| match matrix {
                    TransferMatrix::Unsigned(m) => m.get(i, j).to_string(),
                    TransferMatrix::Signed { matrix, .. } => matrix.get(i, j).to_string(),
                    TransferMatrix::Weighted { matrix, n, .. } => match t_eval {
                        None => shift_multiset_string(matrix.get(i, j)),
                        Some((t, _)) => {
                            let value: f64 = matrix
                                .get(i, j)
                                .iter()
                                .map(|(shift, count)| {
                                    count.to_f64().unwrap_or(f64::INFINITY)
                                        * (t * shift.eval(*n) as f64).exp()
                                })
                                .sum();
                            f64_string(value)
                        }
                    },
                })
                .collect()
        })
        .collect()
}

fn vertex_names(spec: &PlumbingSpec) -> Vec<String> {
    spec.vertices().map(|v| spec.name(v).to_string()).collect()
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    match cli.command {
        Command::Check => {
            let problem = load_problem(&cli.spec)?;
            let spec = &problem.plumbing;
            let report = validate_penner(&problem.word, spec)?;
            let check = CheckJson {
                word_applied_first: word_json(&problem.word, spec),
                penner: penner_json(&report),
                bipartition_plus: spec
                    .bipartition()
                    .plus()
                    .map(|v| spec.name(v).to_string())
                    .collect(),
                bipartition_minus: spec
                    .bipartition()
                    .minus()
                    .map(|v| spec.name(v).to_string())
                    .collect(),
                n: spec.n(),
            };
            let output = if cli.json {
                emit(&check)
            } else {
                render::render_check(&check)
            };
            Ok((output, 0))
        }
        Command::Complex {
            cocore,
            power,
            eval_n,
        } => {
            let problem = load_problem(&cli.spec)?;
            if let Some(n) = eval_n {
                if n < 3 {
                    return Err(penner_entropy::Error::DimensionTooSmall(n).into());
                }
            }
            let source = problem.plumbing.vertex(&cocore)?;
            checked_term_count(&problem, source, power)?;
            let complex = apply_word(&problem.word, source, power, &problem.plumbing)?;
            let json = complex_json(&complex, &problem.plumbing, power, eval_n);
            let output = if cli.json {
                emit(&json)
            } else {
                render::render_complex(&json)
            };
            Ok((output, 0))
        }
        Command::Paths { cocore, power } => {
            let problem = load_problem(&cli.spec)?;
            let source = problem.plumbing.vertex(&cocore)?;
            checked_term_count(&problem, source, power)?;
            let traces = enumerate_traces(&problem.word, power, source, &problem.plumbing)?;
            let json = PathsJson {
                source: cocore,
                power,
                path_count: traces.len(),
                paths: traces
                    .iter()
                    .map(|t| t.display_paper(&problem.plumbing))
                    .collect(),
            };
            let output = if cli.json {
                emit(&json)
            } else {
                render::render_paths(&json)
            };
            Ok((output, 0))
        }
        Command::Matrix { kind, n, t, power } => {
            let problem = load_problem(&cli.spec)?;
            let spec = &problem.plumbing;
            let dimension = n.unwrap_or_else(|| spec.n());
            let t_rational = match &t {
                Some(text) => Some(parse_decimal_rational(text).ok_or_else(|| {
                    CliError::Usage(format!("--t expects a plain decimal, got {text:?}"))
                })?),
                None => None,
            };
            let matrix_kind = match kind {
                KindArg::Unsigned => MatrixKind::Unsigned,
                KindArg::Signed => MatrixKind::Signed { n: dimension },
                KindArg::Weighted => MatrixKind::Weighted {
                    n: dimension,
                    t: t_rational.clone().unwrap_or_else(|| {
                        Rational::new(0.into(), 1.into())
                    }),
                },
            };
            let matrix = word_matrix(&problem.word, power, &matrix_kind, spec)?;
            let t_eval = match (kind, &t_rational) {
                (KindArg::Weighted, Some(r)) => {
                    Some((r.to_f64().unwrap_or(f64::NAN), dimension))
                }
                _ => None,
            };
            let json = MatrixJson {
                kind: match kind {
                    KindArg::Unsigned => "unsigned".into(),
                    KindArg::Signed => "signed".into(),
                    KindArg::Weighted => "weighted".into(),
                },
                n: match kind {
                    KindArg::Unsigned => None,
                    _ => Some(dimension),
                },
                t: t.clone(),
                power,
                vertices: vertex_names(spec),
                rows: matrix_rows(&matrix, t_eval),
            };
            let output = if cli.json {
                emit(&json)
            } else {
                render::render_matrix(&json)
            };
            Ok((output, 0))
        }
        Command::Entropy {
            m_max,
            tol,
            t_values,
            allow_non_penner,
        } => {
            let problem = load_problem(&cli.spec)?;
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let t_values = t_values
                .iter()
                .map(|text| {
                    parse_decimal_rational(text).ok_or_else(|| {
                        CliError::Usage(format!("--t expects a plain decimal, got {text:?}"))
                    })
                })
                .collect::<Result<Vec<Rational>, CliError>>()?;
            let options = ReportOptions {
                m_max,
                tol,
                t_values,
                allow_non_penner,
            };
            let report = entropy_report(&problem.plumbing, &problem.word, &options)?;
            let json = entropy_json(&report, &problem.plumbing);
            let output = if cli.json {
                emit(&json)
            } else {
                render::render_entropy(&json)
            };
            Ok((output, 0))
        }
        Command::Verify { seed, cases } => {
            let mut outcomes = run_verification(seed, cases);
            if cli.spec.is_some() {
                let problem = load_problem(&cli.spec)?;
                outcomes.extend(run_single(&problem, 2));
            }
            let all_passed = outcomes.iter().all(|o| o.passed());
            let json = VerifyJson {
                seed,
                cases,
                all_passed,
                checks: outcomes
                    .iter()
                    .map(|o| VerifyCheckJson {
                        name: o.name.clone(),
                        cases: o.cases,
                        passed: o.passed(),
                        failures: o.failures.clone(),
                    })
                    .collect(),
            };
            let output = if cli.json {
                emit(&json)
            } else {
                render::render_verify(&json)
            };
            Ok((output, if all_passed { 0 } else { 1 }))
        }
    }
}
