//! End-to-end checks of the binary's I/O contract: file formats, error
//! reporting, exit codes, run records, and artifact files.

use serde_json::Value;
use std::path::Path;
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_semiring")
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let out = Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().expect("no signal"),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

const FREE: &str = "generators: w\nrelations:\n";
const EX2: &str = "generators: w\nrelations:\nw = 2w + 2w^2\nw = 3w + 3w^3\n";

#[test]
fn presentation_parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            "zero.txt",
            "generators: w\nrelations:\nw = 0w\n",
            "coefficients must be >= 1",
        ),
        (
            "unknown.txt",
            "generators: w\nrelations:\nw = 2v\n",
            "unknown generator",
        ),
        (
            "headless.txt",
            "relations:\nw = 2w\n",
            "relations before the generators line",
        ),
    ];
    for (name, contents, needle) in cases {
        let file = write_file(dir.path(), name, contents);
        let out = run(&["prove", &file, "--lhs", "w", "--rhs", "w"]);
        assert_eq!(out.code, 1, "{name}");
        assert!(out.stderr.contains(needle), "{name}: {}", out.stderr);
    }
}

#[test]
fn analyze_reports_boolean_structure() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("bool.txt");
    let out = run(&["construct", "boolean", "--to", table.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("wrote"));

    let out = run(&["analyze", table.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    for needle in [
        "order: 2",
        "valid: true",
        "idempotent: true",
        "divisible: true",
        "uniquely-divisible: true",
        "unital: true (unit = 1)",
        "add-identity: 0",
        "sigma: {0} {1}",
        "sigma-quotient: order 2 (sigma on it is identity)",
        "ideal-simple: true",
    ] {
        assert!(
            out.stdout.contains(needle),
            "missing {needle:?} in:\n{}",
            out.stdout
        );
    }
}

#[test]
fn constructed_tables_feed_back_into_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let tn = dir.path().join("tn.txt");
    assert_eq!(
        run(&[
            "construct",
            "truncnat",
            "--index",
            "1",
            "--period",
            "2",
            "--to",
            tn.to_str().unwrap()
        ])
        .code,
        0
    );

    // The action-semiring printout carries comment lines; they must be
    // ignored when the table is read back.
    let ts = dir.path().join("ts.txt");
    let out = run(&[
        "construct",
        "ts",
        "--table",
        tn.to_str().unwrap(),
        "--w",
        "1",
        "--to",
        ts.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    let text = std::fs::read_to_string(&ts).unwrap();
    assert!(text.contains("# id:"));
    assert!(text.contains("# phi-w:"));

    let out = run(&["analyze", ts.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("valid: true"));
    assert!(out.stdout.contains("unital: true"));

    // U(S) over the same table satisfies the scalar identities.
    let out = run(&[
        "construct",
        "usemi",
        "--table",
        tn.to_str().unwrap(),
        "--check",
        "6",
    ]);
    assert_eq!(out.code, 0);
    assert!(out
        .stdout
        .contains("ok: all identities hold over scalars <= 6"));
}

#[test]
fn census_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.census");
    let b = dir.path().join("b.census");
    let one = run(&[
        "enumerate",
        "--order",
        "3",
        "--up-to-iso",
        "--census",
        a.to_str().unwrap(),
    ]);
    let three = run(&[
        "enumerate",
        "--order",
        "3",
        "--up-to-iso",
        "--jobs",
        "3",
        "--census",
        b.to_str().unwrap(),
    ]);
    assert_eq!(one.code, 0);
    assert_eq!(three.code, 0);
    assert!(one.stdout.contains("count: 80"));
    assert_eq!(one.stdout, three.stdout);
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn run_records_accumulate_as_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "free.txt", FREE);
    let rec = dir.path().join("runs.jsonl");

    let out = run(&[
        "prove",
        &file,
        "--lhs",
        "w",
        "--rhs",
        "w",
        "--out",
        rec.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    let out = run(&[
        "order",
        &file,
        "--target",
        "w",
        "--out",
        rec.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 2);

    let text = std::fs::read_to_string(&rec).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let first: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["command"][1], "prove");
    assert!(first["input_digest"].as_str().unwrap().len() == 64);
    assert!(first["budget"]["max_degree"].is_u64());
    assert!(first["wall_ms"].is_u64());
    assert!(first["outcome"].as_str().unwrap().starts_with("found"));
    assert_eq!(first["artifacts"].as_array().unwrap().len(), 0);
    let second: Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(second["outcome"], "not-found");
}

#[test]
fn proof_artifact_is_written_and_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "ex2.txt", EX2);
    let proof = dir.path().join("out.proof");
    let rec = dir.path().join("runs.jsonl");

    let out = run(&[
        "prove",
        &file,
        "--lhs",
        "w",
        "--rhs",
        "2w + 2w^2",
        "--proof",
        proof.to_str().unwrap(),
        "--out",
        rec.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("steps:"));
    assert!(out.stdout.contains("proof:"));
    assert!(!std::fs::read_to_string(&proof).unwrap().is_empty());

    let record: Value = serde_json::from_str(
        std::fs::read_to_string(&rec)
            .unwrap()
            .lines()
            .next()
            .unwrap(),
    )
    .unwrap();
    let artifacts = record["artifacts"].as_array().unwrap();
    assert_eq!(artifacts.len(), 1);
    assert!(artifacts[0].as_str().unwrap().ends_with("out.proof"));
}

#[test]
fn exit_codes_distinguish_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let free = write_file(dir.path(), "free.txt", FREE);
    let ex2 = write_file(dir.path(), "ex2.txt", EX2);

    // 0: proved (the identity proof is empty but still a proof).
    let out = run(&["prove", &free, "--lhs", "w", "--rhs", "w"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("FOUND"));
    assert!(out.stdout.contains("steps: 0"));

    // 1: malformed term.
    let out = run(&["prove", &free, "--lhs", "w +", "--rhs", "w"]);
    assert_eq!(out.code, 1);

    // 2: the saturation closed with no goal and nothing left to try.
    let out = run(&["prove", &free, "--lhs", "2w", "--rhs", "3w"]);
    assert_eq!(out.code, 2);
    assert_eq!(out.stdout.trim(), "NOT-FOUND");

    // 3: the universe cap cut the search short of a provable goal.
    let out = run(&[
        "prove",
        &ex2,
        "--lhs",
        "8w",
        "--rhs",
        "19w",
        "--max-universe",
        "10",
    ]);
    assert_eq!(out.code, 3);
    assert_eq!(out.stdout.trim(), "NOT-FOUND (budget exhausted)");
}

#[test]
fn misuse_is_rejected() {
    let out = run(&["bound", "--max-ord", "21"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("capped at 20"));

    let out = run(&["bound", "--max-ord", "3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("r: 24"));
    assert!(out.stdout.contains("bound: 47"));

    let out = run(&["harness", "nope"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("conjA"));

    let out = run(&["enumerate", "--order", "9"]);
    assert_eq!(out.code, 1);
}

#[test]
fn prufer_commands_print_exact_fractions() {
    let out = run(&["construct", "prufer", "--p", "2", "--witnesses", "2", "0"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "0\n1/2\ncount: 2\n");

    let out = run(&["construct", "prufer", "--p", "3", "--add", "1/3", "2/9"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "5/9");

    let out = run(&["construct", "prufer", "--p", "2", "--add", "1/2", "1/3"]);
    assert_eq!(out.code, 1);
}

#[test]
fn divisible_reports_a_replayable_factor() {
    let dir = tempfile::tempdir().unwrap();
    let single = write_file(
        dir.path(),
        "single.txt",
        "generators: w\nrelations:\nw = 2w + 2w^2\n",
    );
    let out = run(&["divisible", &single, "--n", "2", "--target", "w"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.starts_with("FOUND factor: w + w^2"),
        "{}",
        out.stdout
    );
}
