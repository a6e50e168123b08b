use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cisgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn ok(args: &[&str], stdin: &str) -> Vec<Value> {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    lines(&out)
}

const BULL: &str = "DhW";
const P4: &str = "Ch";
const C4: &str = "Cl";
const L_K33: &str = "HhsZLaF";
const CLAW: &str = "Cs";

#[test]
fn check_cis_examples() {
    let out = ok(&["check-cis", "--format", "graph6", "-"], &format!("{BULL}\n{P4}\n@\n"));
    assert_eq!(out.len(), 3);
    assert_eq!(out[0]["cis"], true);
    assert_eq!(out[0]["schema"], "cisgraph/1");
    assert_eq!(out[1]["cis"], false);
    assert_eq!(out[1]["witness"], json!({"clique": [1, 2], "stable_set": [0, 3]}));
    assert_eq!(out[2]["cis"], true);
}

#[test]
fn check_cis_comb_screening() {
    let out = ok(&["check-cis", "--combs", "3"], &format!("{P4}\n{BULL}\n"));
    assert!(out[0]["combs"]["unsettled_comb"].is_object());
    assert!(out[1]["combs"]["unsettled_comb"].is_null());
    assert!(out[1]["combs"]["unsettled_anticomb"].is_null());
}

#[test]
fn recognize_examples() {
    let out = ok(&["recognize", "--verify"], &format!("{C4}\n{L_K33}\n{CLAW}\n"));
    assert_eq!(out[0]["verdict"], "cis");
    assert_eq!(out[0]["components"][0]["form"], "complement_pk2_qk1");
    assert_eq!(out[0]["components"][0]["params"], json!({"p": 2, "q": 0}));
    assert_eq!(out[1]["components"][0]["form"], "line_of_knn");
    assert_eq!(out[1]["components"][0]["params"], json!({"n": 3}));
    assert_eq!(out[2]["verdict"], "not_claw_free");
    assert_eq!(out[2]["refutation"], json!({"kind": "claw", "vertices": [0, 1, 2, 3]}));
    assert!(out.iter().all(|l| l["verification"]["agrees"] == true));
}

#[test]
fn root_and_rim() {
    let out = ok(&["root", "--verify"], &format!("{C4}\n{CLAW}\n"));
    assert_eq!(out[0]["line_graph"], true);
    assert_eq!(out[0]["verified"], true);
    assert_eq!(out[1]["line_graph"], false);
    assert_eq!(out[1]["claw"], json!([0, 1, 2, 3]));

    // P5 is not RIM, K_{3,3} is.
    let out = ok(&["rim", "--verify"], "DhC\nEFz_\n");
    assert_eq!(out[0]["rim"], false);
    assert_eq!(out[1]["rim"], true);
    assert_eq!(out[1]["components"][0]["form"]["verdict"], "Knn");
}

#[test]
fn stats_examples() {
    let out = ok(&["stats"], "Dhc\n@\n");
    assert_eq!(out[0]["alpha"], 2);
    assert_eq!(out[0]["omega"], 2);
    assert_eq!(out[0]["bound_holds"], false);
    let eh = out[0]["eh_exponent"].as_f64().unwrap();
    assert!((eh - 2f64.ln() / 5f64.ln()).abs() < 1e-12);
    assert!(out[1]["eh_exponent"].is_null());
}

fn rows(out: &[Value]) -> Vec<(u64, u64, u64, u64, bool)> {
    out[0]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["p"].as_u64().unwrap(),
                r["order"].as_u64().unwrap(),
                r["alpha"].as_u64().unwrap(),
                r["omega"].as_u64().unwrap(),
                r["violates"].as_bool().unwrap(),
            )
        })
        .collect()
}

#[test]
fn counterexample_examples() {
    let out = ok(&["counterexample", "--base", "c5", "--p", "3"], "");
    assert_eq!(rows(&out), vec![(3, 50, 7, 7, true)]);
    assert_eq!(out[0]["rows"][0]["certification"], "oracle_verified");

    let out = ok(&["counterexample", "--base", "c5", "--p-range", "1..4"], "");
    let flagged: Vec<u64> = rows(&out).iter().filter(|r| r.4).map(|r| r.0).collect();
    assert_eq!(flagged, vec![3, 4]);

    let out = ok(&["counterexample", "--base", "k2", "--p", "2"], "");
    assert_eq!(rows(&out), vec![(2, 9, 2, 5, false)]);
}

#[test]
fn counterexample_from_recipe_and_random_base() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("recipe.json");
    std::fs::write(&path, r#"{"base": "Dhc", "p": 3}"#).unwrap();
    let out = ok(&["counterexample", "--recipe", path.to_str().unwrap()], "");
    assert_eq!(rows(&out), vec![(3, 50, 7, 7, true)]);

    let a = ok(&["counterexample", "--random-base", "6", "--seed", "9", "--p", "2"], "");
    let b = ok(&["counterexample", "--random-base", "6", "--seed", "9", "--p", "2"], "");
    assert_eq!(a, b);
    assert_eq!(a[0]["seed"], 9);
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "4\n0 1\n1 2\n# middle edge above\n2 3\n").unwrap();
    let out = ok(&["check-cis", "--format", "edgelist", path.to_str().unwrap()], "");
    assert_eq!(out[0]["cis"], false);
    assert_eq!(out[0]["graph"], P4);
}

#[test]
fn scan_examples() {
    let out = ok(&["scan", "--property", "cis", "--mode", "exhaustive", "--max-n", "4"], "");
    assert_eq!(out[0]["examined"], 64);
    assert_eq!(out[0]["violation_count"], 0);

    let out = ok(&["scan", "--property", "rim", "--max-n", "5", "--min-n", "1", "--connected-only"], "");
    assert_eq!(out[0]["violation_count"], 0);
    assert_eq!(out[0]["skipped"].as_u64().unwrap() + out[0]["examined"].as_u64().unwrap(), 1 + 2 + 8 + 64 + 1024);

    let out = ok(&["scan", "--property", "bound", "--max-n", "6", "--min-n", "1"], "");
    assert_eq!(out[0]["violation_count"], 0);
    assert!(out[0]["counts"]["bound_holds"].as_u64().unwrap() > 0);

    let out = ok(&["scan", "--property", "domino", "--max-n", "5", "--min-n", "1"], "");
    assert_eq!(out[0]["violation_count"], 0);
}

#[test]
fn scans_are_deterministic_across_job_counts() {
    let base = ["scan", "--mode", "sample", "--property", "clawfree-cis", "--min-n", "7", "--max-n", "9"];
    let mut one = base.to_vec();
    one.extend(["--samples", "300", "--seed", "5", "--stream"]);
    let mut two = one.clone();
    two.extend(["--jobs", "2"]);
    let a = run(&one, "");
    let b = run(&two, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = lines(&a);
    assert_eq!(out.len(), 301);
    assert_eq!(out[300]["examined"], 300);
}

#[test]
fn corpus_scan() {
    let out = ok(&["scan", "--mode", "corpus", "--property", "clawfree-cis"], &format!("{BULL}\n{P4}\n{CLAW}\n"));
    assert_eq!(out[0]["examined"], 2);
    assert_eq!(out[0]["skipped"], 1);
    assert_eq!(out[0]["counts"], json!({"cis": 1, "not_cis": 1}));
}

#[test]
fn errors_are_reported_as_json() {
    let out = run(&["check-cis"], "not graph6 at all\n");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(lines(&out)[0]["error"]["kind"], "parse");

    let out = run(&["scan", "--max-n", "8"], "");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(lines(&out)[0]["error"]["kind"], "invalid_parameter");

    let out = run(&["scan", "--mode", "sample", "--samples", "0"], "");
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["check-cis", "--cap", "2"], "Cl\n");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(lines(&out)[0]["error"]["kind"], "cap_exceeded");

    let out = run(&["counterexample", "--base", "k3", "--p", "2"], "");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(lines(&out)[0]["error"]["kind"], "precondition");
}
