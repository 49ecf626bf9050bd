//! End-to-end tests of the command-line interface: every subcommand is run
//! as a child process and its exit code and output are checked against the
//! documented contract (0 = pass, 1 = a verification failed, 2 = usage or
//! lookup error).

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

/// The compiled binary, isolated from any ambient catalog directory.
fn weldbraid() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weldbraid"));
    cmd.env_remove("CATALOG_DIR");
    cmd
}

/// Runs the command and returns `(exit code, stdout, stderr)`.
fn run(mut cmd: Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().expect("spawning the binary");
    (
        status.code().expect("exit code"),
        String::from_utf8(stdout).expect("utf-8 stdout"),
        String::from_utf8(stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn list_prints_every_builtin_entry() {
    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.arg("list");
        c
    });
    assert_eq!(code, 0);
    for line in [
        "group group:S3",
        "gr-group gr:Z2-Z3",
        "crossed-module xmod:gr:Z2-Z3",
        "bikoid finite-group:Z2",
        "bikoid xmod-gr-star:Z2-Z3",
        "bikoid xmod-R:Z2-Z3:R=2",
        "groupoid trans-pair:Z2-Z3",
        "groupoid trans-twisted:Z2-Z3:R=0",
    ] {
        assert!(stdout.lines().any(|l| l == line), "missing `{line}` in:\n{stdout}");
    }

    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["list", "--kind", "bikoid"]);
        c
    });
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 8);
    assert!(stdout.lines().all(|l| l.starts_with("bikoid ")));
}

#[test]
fn verify_passes_builtin_targets_and_honours_the_alias() {
    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["verify", "gr:Z2-Z3"]);
        c
    });
    assert_eq!(code, 0, "verify gr:Z2-Z3 failed:\n{stdout}");
    assert!(stdout.contains("PASS"));
    assert!(!stdout.contains("FAIL"));

    // `finite-group-bikoid:` is accepted as an alias of `finite-group:`.
    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["verify", "finite-group-bikoid:S3"]);
        c
    });
    assert_eq!(code, 0, "verify finite-group-bikoid:S3 failed:\n{stdout}");
    assert!(stdout.contains("bikoid `finite-group-bikoid:S3`: PASS"));
    assert!(stdout.contains("essential: yes"));
}

#[test]
fn verify_rejects_unknown_names_with_a_usage_error() {
    let (code, _, stderr) = run({
        let mut c = weldbraid();
        c.args(["verify", "no-such-entry"]);
        c
    });
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown catalog name"), "stderr was:\n{stderr}");
}

#[test]
fn eval_reports_frozen_orders_and_exports_the_matrix() {
    let dir = tempfile::tempdir().expect("tempdir");
    let json_path = dir.path().join("op.json");
    let text_path = dir.path().join("op.txt");

    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["eval", "--bikoid", "finite-group:Z2", "--n", "2", "--word", "S+1"]);
        c.arg("--out").arg(&json_path);
        c
    });
    assert_eq!(code, 0, "eval failed:\n{stdout}");
    assert!(stdout.contains("strand permutation: [1, 0]"));
    assert!(stdout.contains("operator: permutation of dimension 16"));
    assert!(stdout.contains("order: 4"));

    let exported: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json_path).expect("reading export"))
            .expect("parsing export");
    assert_eq!(exported["rows"], 16);
    assert_eq!(exported["cols"], 16);
    let entries = exported["entries"].as_array().expect("entries array");
    assert_eq!(entries.len(), 16);
    assert!(entries.iter().all(|e| e["v"] == "1/1"));

    let (code, _, _) = run({
        let mut c = weldbraid();
        c.args(["eval", "--bikoid", "finite-group:Z2", "--n", "2", "--word", "S+1"]);
        c.arg("--out").arg(&text_path);
        c
    });
    assert_eq!(code, 0);
    let text = fs::read_to_string(&text_path).expect("reading text export");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("16 16"));
    assert_eq!(lines.count(), 16);

    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args([
            "eval",
            "--bikoid",
            "xmod-gr-star:Z2-Z3",
            "--rep",
            "object-regular",
            "--n",
            "2",
            "--word",
            "S+1",
        ]);
        c
    });
    assert_eq!(code, 0, "eval failed:\n{stdout}");
    assert!(stdout.contains("order: 12"));
}

#[test]
fn eval_handles_the_empty_word_and_rejects_bad_usage() {
    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["eval", "--bikoid", "finite-group:Z2", "--n", "2", "--word", ""]);
        c
    });
    assert_eq!(code, 0, "empty-word eval failed:\n{stdout}");
    assert!(stdout.contains("strand permutation: [0, 1]"));
    assert!(stdout.contains("order: 1"));

    // A strand index beyond the declared width is a usage error.
    let (code, _, stderr) = run({
        let mut c = weldbraid();
        c.args(["eval", "--bikoid", "finite-group:Z2", "--n", "2", "--word", "S+9"]);
        c
    });
    assert_eq!(code, 2, "stderr was:\n{stderr}");

    // A per-strand colour list must match the strand count.
    let (code, _, stderr) = run({
        let mut c = weldbraid();
        c.args(["eval", "--bikoid", "finite-group:Z2", "--n", "2", "--word", "S+1"]);
        c.args(["--colors", "right-regular"]);
        c
    });
    assert_eq!(code, 2);
    assert!(stderr.contains("--colors lists 1 specs for 2 strands"), "stderr:\n{stderr}");

    let (code, _, stderr) = run({
        let mut c = weldbraid();
        c.args(["eval", "--bikoid", "no-such-bikoid", "--n", "2", "--word", "S+1"]);
        c
    });
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown bikoid"), "stderr:\n{stderr}");
}

#[test]
fn relations_pass_and_the_forbidden_probe_is_informational() {
    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["relations", "--bikoid", "finite-group:S3", "--n", "3"]);
        c
    });
    assert_eq!(code, 0, "relations failed:\n{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("[pass]")));

    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.args(["relations", "--bikoid", "finite-group:S3", "--n", "3", "--forbidden-reverse"]);
        c
    });
    // The probe is informational: its expected failure on an essential bikoid
    // does not change the exit code.
    assert_eq!(code, 0, "relations --forbidden-reverse failed:\n{stdout}");
    assert!(stdout.contains("[info] forbidden under-commutation fails"));
}

#[test]
fn oracle_is_reproducible_for_a_fixed_seed() {
    let oracle_args = ["oracle", "--trials", "25", "--seed", "7", "--sweep"];
    let (code, first, _) = run({
        let mut c = weldbraid();
        c.args(oracle_args);
        c
    });
    assert_eq!(code, 0, "oracle failed:\n{first}");
    assert!(first.contains("25 random trials passed"));
    assert!(first.contains("single-generator sweep passed (108 cases)"));

    let (code, second, _) = run({
        let mut c = weldbraid();
        c.args(oracle_args);
        c
    });
    assert_eq!(code, 0);
    assert_eq!(first, second, "a fixed seed must reproduce the run exactly");

    let dir = tempfile::tempdir().expect("tempdir");
    let out_path = dir.path().join("oracle.json");
    let (code, _, _) = run({
        let mut c = weldbraid();
        c.args(oracle_args);
        c.arg("--out").arg(&out_path);
        c
    });
    assert_eq!(code, 0);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out_path).expect("reading report"))
            .expect("parsing report");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["random"]["trials"], 25);
    assert_eq!(report["sweep_cases"], 108);
}

/// Writes one JSON descriptor into `dir` under `file`.
fn write_descriptor(dir: &Path, file: &str, value: &serde_json::Value) {
    fs::write(dir.join(file), serde_json::to_string_pretty(value).expect("encoding"))
        .expect("writing descriptor");
}

#[test]
fn catalog_directory_extends_the_builtins() {
    let dir = tempfile::tempdir().expect("tempdir");
    write_descriptor(
        dir.path(),
        "z4.json",
        &serde_json::json!({
            "kind": "group",
            "name": "group:Z4",
            "mul": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]],
        }),
    );

    let (code, stdout, stderr) = run({
        let mut c = weldbraid();
        c.arg("--catalog").arg(dir.path());
        c.args(["list", "--kind", "group"]);
        c
    });
    assert_eq!(code, 0, "stderr:\n{stderr}");
    assert!(stderr.contains("loaded 1 descriptor(s)"));
    assert!(stdout.lines().any(|l| l == "group group:Z4"), "stdout:\n{stdout}");

    // The directory is also picked up from the environment.
    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.env("CATALOG_DIR", dir.path());
        c.args(["verify", "group:Z4"]);
        c
    });
    assert_eq!(code, 0, "verify group:Z4 failed:\n{stdout}");
    assert!(stdout.contains("group `group:Z4`: PASS"));
}

/// Permutations of three points in lexicographic order, giving a concrete
/// six-element nonabelian group for descriptor tests.
fn three_point_permutations() -> Vec<[usize; 3]> {
    let mut all = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if b == a {
                continue;
            }
            let c = 3 - a - b;
            all.push([a, b, c]);
        }
    }
    all
}

fn compose(p: [usize; 3], q: [usize; 3]) -> [usize; 3] {
    [q[p[0]], q[p[1]], q[p[2]]]
}

fn invert(p: [usize; 3]) -> [usize; 3] {
    let mut inv = [0; 3];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

#[test]
fn a_loaded_birack_that_breaks_the_welded_laws_fails_verification() {
    // Conjugating the over strand instead of the under strand still satisfies
    // the birack axioms, but over actions by a nonabelian group no longer
    // commute, so the welded suite must flag it and exit with code 1.
    let perms = three_point_permutations();
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("a known permutation");
    let n = perms.len();
    let over: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| index(compose(compose(invert(perms[x]), perms[y]), perms[x])))
                .collect()
        })
        .collect();
    let under: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();

    let dir = tempfile::tempdir().expect("tempdir");
    write_descriptor(
        dir.path(),
        "mirror.json",
        &serde_json::json!({
            "kind": "birack",
            "name": "birack:mirror-conj-S3",
            "size": n,
            "over": over,
            "under": under,
        }),
    );

    let (code, stdout, _) = run({
        let mut c = weldbraid();
        c.arg("--catalog").arg(dir.path());
        c.args(["verify", "birack:mirror-conj-S3"]);
        c
    });
    assert_eq!(code, 1, "stdout:\n{stdout}");
    assert!(stdout.contains("[pass] birack axioms"));
    assert!(stdout.contains("[FAIL] welded laws"));
}

#[test]
fn broken_descriptors_are_rejected_at_load_time() {
    let dir = tempfile::tempdir().expect("tempdir");
    write_descriptor(
        dir.path(),
        "bad.json",
        &serde_json::json!({
            "kind": "birack",
            "name": "birack:bad",
            "size": 2,
            "over": [[0, 7], [0, 0]],
            "under": [[0, 0], [0, 0]],
        }),
    );

    let (code, _, stderr) = run({
        let mut c = weldbraid();
        c.arg("--catalog").arg(dir.path());
        c.arg("list");
        c
    });
    assert_eq!(code, 2);
    assert!(stderr.contains("invalid catalog entry `birack:bad`"), "stderr:\n{stderr}");
}
