//! Binary-level tests: exit codes, worked-example output, and JSON
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_penner-entropy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn paths_of_the_worked_example() {
    let spec = testdata("a3w4.json");
    let out = run(&["--spec", spec.to_str().unwrap(), "paths", "--cocore", "3", "--power", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "[1,1,2,3]",
            "[2,1,2,3]",
            "[2,2,3]",
            "[2,3,2,3]",
            "[3,3,2,3]",
            "[2,3,3]",
            "[3,3,3]"
        ]
    );
}

#[test]
fn complex_shift_column_follows_emission_order() {
    let spec = testdata("a3w4.json");
    let out = run(&[
        "--spec",
        spec.to_str().unwrap(),
        "--json",
        "complex",
        "--cocore",
        "3",
        "--power",
        "1",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let shifts: Vec<&str> = json["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["shift"].as_str().unwrap())
        .collect();
    assert_eq!(shifts, ["-1", "0", "n-1", "0", "1-n", "1-n", "2-2n"]);
    assert_eq!(json["term_count"], 7);

    // Evaluated at n = 3: -1, 0, 2, 0, -2, -2, -4.
    let out = run(&[
        "--spec",
        spec.to_str().unwrap(),
        "--json",
        "complex",
        "--cocore",
        "3",
        "--power",
        "1",
        "--eval-n",
        "3",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let shifts: Vec<&str> = json["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["shift"].as_str().unwrap())
        .collect();
    assert_eq!(shifts, ["-1", "0", "2", "0", "-2", "-2", "-4"]);
}

#[test]
fn unsigned_matrix_rows_as_decimal_strings() {
    let spec = testdata("a3.json");
    let out = run(&["--spec", spec.to_str().unwrap(), "--json", "matrix", "--kind", "unsigned"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        json["rows"],
        serde_json::json!([["1", "1", "1"], ["1", "2", "2"], ["0", "1", "2"]])
    );
    // Power 0 is the identity.
    let out = run(&[
        "--spec",
        spec.to_str().unwrap(),
        "--json",
        "matrix",
        "--kind",
        "unsigned",
        "--power",
        "0",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        json["rows"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    );
}

#[test]
fn entropy_json_encloses_the_known_value() {
    let spec = testdata("a3.json");
    let out = run(&["--spec", spec.to_str().unwrap(), "--json", "entropy", "--m-max", "4"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lo: f64 = json["exact_entropy"]["lo"].as_str().unwrap().parse().unwrap();
    let hi: f64 = json["exact_entropy"]["hi"].as_str().unwrap().parse().unwrap();
    let target = 1.3169578969248166; // log(2 + sqrt(3))
    assert!(lo <= target && target <= hi);
    assert!(hi - lo <= 1e-9);
    assert_eq!(json["penner"]["polarity"], "standard");
    assert_eq!(json["radius_method"], "charpoly");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let spec = testdata("a3.json");
    let args = ["--spec", spec.to_str().unwrap(), "--json", "entropy", "--t", "0.5"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn entropy_json_round_trips_through_the_schema() {
    let spec = testdata("a3.json");
    let out = run(&["--spec", spec.to_str().unwrap(), "--json", "entropy", "--m-max", "3"]);
    let text = stdout(&out);
    let parsed: penner_entropy_cli::report::EntropyJson = serde_json::from_str(&text).unwrap();
    let emitted = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(text, emitted);
}

#[test]
fn exit_codes() {
    let a3 = testdata("a3.json");

    // Usage errors exit 2: missing --spec, unknown flag, bad subcommand.
    assert_eq!(run(&["check"]).status.code(), Some(2));
    assert_eq!(
        run(&["--spec", a3.to_str().unwrap(), "check", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["--spec", "/nonexistent/x.json", "check"]).status.code(),
        Some(2)
    );

    // Domain and schema errors exit 1.
    let dir = std::env::temp_dir().join("penner-entropy-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let base = std::fs::read_to_string(&a3).unwrap();

    let small_n = dir.join("small_n.json");
    std::fs::write(&small_n, base.replace("\"n\": 5", "\"n\": 2")).unwrap();
    let out = run(&["--spec", small_n.to_str().unwrap(), "check"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension"));

    let both = dir.join("both_words.json");
    std::fs::write(
        &both,
        base.replace(
            "\"word_applied_first\":",
            "\"word_paper_order\": [], \"word_applied_first\":",
        ),
    )
    .unwrap();
    assert_eq!(run(&["--spec", both.to_str().unwrap(), "check"]).status.code(), Some(1));

    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(run(&["--spec", garbage.to_str().unwrap(), "check"]).status.code(), Some(1));

    // Unknown cocore vertex: domain error.
    assert_eq!(
        run(&["--spec", a3.to_str().unwrap(), "complex", "--cocore", "9"]).status.code(),
        Some(1)
    );

    // Non-Penner word without the override: domain error; with it: fine.
    let nonp = dir.join("non_penner.json");
    std::fs::write(
        &nonp,
        base.replace(
            "{\"vertex\": \"2\", \"sign\": \"-\"}",
            "{\"vertex\": \"2\", \"sign\": \"+\"}",
        ),
    )
    .unwrap();
    assert_eq!(run(&["--spec", nonp.to_str().unwrap(), "entropy"]).status.code(), Some(1));
    let out = run(&["--spec", nonp.to_str().unwrap(), "entropy", "--allow-non-penner", "--m-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not of Penner type"));
}

#[test]
fn verify_subcommand_passes_and_is_seeded() {
    let spec = testdata("a3.json");
    let out = run(&[
        "--spec",
        spec.to_str().unwrap(),
        "verify",
        "--seed",
        "11",
        "--cases",
        "25",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("overall: PASS"));

    let again = run(&[
        "--spec",
        spec.to_str().unwrap(),
        "verify",
        "--seed",
        "11",
        "--cases",
        "25",
    ]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn check_reports_the_bipartition() {
    let spec = testdata("a3.json");
    let out = run(&["--spec", spec.to_str().unwrap(), "--json", "check"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["bipartition_plus"], serde_json::json!(["1", "3"]));
    assert_eq!(json["bipartition_minus"], serde_json::json!(["2"]));
    assert_eq!(json["penner"]["is_penner"], true);
    assert_eq!(json["penner"]["covers_all_vertices"], true);
}

#[test]
fn weighted_matrix_symbolic_and_evaluated() {
    let spec = testdata("a3.json");
    let out = run(&["--spec", spec.to_str().unwrap(), "--json", "matrix", "--kind", "weighted"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Entry (1,1) collects the L_2 components of the rewritten L_2;
    // shifts n-1 and 0 per the staged example, in (a, b) term order.
    assert_eq!(json["rows"][1][1], "e(n-1)+e(0)");
    let out = run(&[
        "--spec",
        spec.to_str().unwrap(),
        "--json",
        "matrix",
        "--kind",
        "weighted",
        "--t",
        "0",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["rows"][1][1], "2");
}
