use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const SENTINEL: &str = "---- equitri json ----";

fn equitri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equitri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn json_block(o: &Output) -> serde_json::Value {
    let out = stdout(o);
    let (_, json) = out.split_once(SENTINEL).expect("sentinel present");
    serde_json::from_str(json).expect("json after sentinel")
}

#[test]
fn build_then_verify_rp2() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "s2.tri");
    assert_eq!(code(&equitri(&["build", "sigma-rpn", "--n", "2", "--out", &tri])), 0);
    assert!(Path::new(&path(&dir, "s2.act")).exists());
    let v = equitri(&["verify", &tri, "--action", &path(&dir, "s2.act"), "--expect", "rp2"]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    assert_eq!(json_block(&v)["verdict"], "RP^2");
}

#[test]
fn wrong_expectation_is_a_mismatch() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "r.tri");
    equitri(&["build", "reduced", "--n", "2", "--out", &tri]);
    assert_eq!(code(&equitri(&["verify", &tri, "--expect", "s2"])), 2);
    assert_eq!(code(&equitri(&["verify", &tri, "--expect", "rp2"])), 0);
}

#[test]
fn sigma_rp3_reports_its_identification_defect() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "s3.tri");
    let b = equitri(&["build", "sigma-rpn", "--n", "3", "--out", &tri, "--format", "json"]);
    assert_eq!(code(&b), 0);
    let j: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(j["f_vector"][0], 16);
    assert!(j["defect"].is_object());
    let v = equitri(&["verify", &tri, "--action", &path(&dir, "s3.act"), "--expect", "rp3"]);
    assert_eq!(code(&v), 2);
}

#[test]
fn dangling_ridge_is_named() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "bad.tri");
    fs::write(&tri, "dim 2\n1 2 3\n1 2 4\n1 2 5\n").unwrap();
    let v = equitri(&["verify", &tri]);
    assert_eq!(code(&v), 2);
    assert!(stdout(&v).contains("ridge [1 2] lies in 3 facets"));
}

#[test]
fn malformed_input_has_line_numbers() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "mal.tri");
    fs::write(&tri, "dim 2\n1 2 3\n1 1 4\n").unwrap();
    let v = equitri(&["verify", &tri]);
    assert_eq!(code(&v), 1);
    assert!(String::from_utf8_lossy(&v.stderr).contains("line 3"));
    assert_eq!(code(&equitri(&["verify", &path(&dir, "missing.tri")])), 1);
}

#[test]
fn unknown_flags_are_rejected() {
    assert_eq!(code(&equitri(&["lemma6", "--bogus"])), 1);
    assert_eq!(code(&equitri(&["frobnicate"])), 1);
    assert_eq!(code(&equitri(&["build", "sigma-rpn"])), 1);
}

#[test]
fn out_requires_force_to_overwrite() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "a.tri");
    assert_eq!(code(&equitri(&["catalog", "rp2-6", "--out", &tri])), 0);
    fs::write(&tri, "sentinel").unwrap();
    assert_eq!(code(&equitri(&["catalog", "rp2-6", "--out", &tri])), 1);
    assert_eq!(fs::read_to_string(&tri).unwrap(), "sentinel");
    assert_eq!(code(&equitri(&["catalog", "rp2-6", "--out", &tri, "--force"])), 0);
    assert!(fs::read_to_string(&tri).unwrap().starts_with("dim 2\n"));
}

#[test]
fn iso_between_catalog_entries() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.tri");
    let c = path(&dir, "c.tri");
    equitri(&["catalog", "rp3-11a", "--out", &a]);
    equitri(&["catalog", "rp3-14", "--out", &c]);
    let relabeled: String = fs::read_to_string(&a)
        .unwrap()
        .lines()
        .map(|l| {
            if l.starts_with("dim") {
                format!("{l}\n")
            } else {
                let t: Vec<String> = l.split(' ').map(|x| format!("w{x}")).collect();
                format!("{}\n", t.join(" "))
            }
        })
        .collect();
    let b = path(&dir, "b.tri");
    fs::write(&b, relabeled).unwrap();
    let same = equitri(&["iso", &a, &b, "--format", "json"]);
    assert_eq!(code(&same), 0);
    let j: serde_json::Value = serde_json::from_str(&stdout(&same)).unwrap();
    assert_eq!(j["isomorphic"], true);
    let diff = equitri(&["iso", &a, &c]);
    assert_eq!(code(&diff), 0);
    assert!(stdout(&diff).starts_with("not isomorphic"));
}

#[test]
fn quotient_of_sigma_rp2_is_a_disk() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "s.tri");
    equitri(&["build", "sigma-rpn", "--n", "2", "--out", &tri]);
    let q = path(&dir, "q.tri");
    let o = equitri(&["quotient", &tri, "--action", &path(&dir, "s.act"), "--out", &q]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("orbit space verdict: B^2"));
    assert_eq!(code(&equitri(&["verify", &q, "--expect", "ball"])), 0);
}

#[test]
fn homology_of_rp2() {
    let dir = TempDir::new().unwrap();
    let tri = path(&dir, "p.tri");
    equitri(&["catalog", "rp2-6", "--out", &tri]);
    let o = equitri(&["homology", &tri, "--coefficients", "z"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("Z: H0=Z H1=Z/2 H2=0\n"));
}

#[test]
fn sphere_enumeration_and_budget() {
    let o = equitri(&["enumerate-spheres", "--v", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["census"]["count"], 2);
    assert_eq!(j["census"]["status"]["status"], "complete");
    assert_eq!(code(&equitri(&["enumerate-spheres", "--v", "8", "--node-limit", "50"])), 3);
    assert_eq!(code(&equitri(&["enumerate-spheres", "--v", "12"])), 1);
}

#[test]
fn lemma6_finds_nothing() {
    let o = equitri(&["lemma6"]);
    assert_eq!(code(&o), 0);
    let j = json_block(&o);
    assert_eq!(j["spheres"], 14);
    assert_eq!(j["counterexamples"].as_array().unwrap().len(), 0);
    assert!(stdout(&o).contains("strictly weaker"));
    assert_eq!(code(&equitri(&["lemma6", "--node-limit", "10"])), 3);
}

#[test]
fn report_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.txt");
    let b = path(&dir, "b.txt");
    assert_eq!(code(&equitri(&["report", "--max-n", "3", "--out", &a])), 0);
    let o = Command::new(env!("CARGO_BIN_EXE_equitri"))
        .args(["report", "--max-n", "3", "--out", &b])
        .env("EQUITRI_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let ta = fs::read(&a).unwrap();
    assert_eq!(ta, fs::read(&b).unwrap());
    assert!(String::from_utf8(ta).unwrap().contains(SENTINEL));
}

#[test]
fn bad_thread_override_is_an_input_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_equitri"))
        .args(["catalog", "--list"])
        .env("EQUITRI_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
}
