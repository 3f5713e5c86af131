use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn twbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn treewidth_of_k4() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.g6", "C~\n");
    let out = twbound(&["treewidth", s(&k4)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn treewidth_writes_pace_and_dot() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let td = dir.path().join("c5.td");
    let dot = dir.path().join("c5.dot");
    let out = twbound(&["treewidth", s(&c5), "--td", s(&td), "--dot", s(&dot)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "2\n");
    assert!(fs::read_to_string(&td).unwrap().starts_with("s td "));
    assert!(fs::read_to_string(&dot).unwrap().contains("graph"));
}

#[test]
fn wall_prints_graph6() {
    let out = twbound(&["wall", "2", "--format", "graph6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let g = twbound::io::graph6::decode(text.trim()).unwrap();
    assert_eq!(g, twbound::families::wall(2).unwrap());
}

#[test]
fn clique_json() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.g6", "C~\n");
    let out = twbound(&["clique", s(&k4), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["clique_number"], 4);
}

#[test]
fn verify_triangle_free_suite_exits_zero() {
    let out = twbound(&["verify", "obs7", "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verdict pass"));
}

#[test]
fn verify_json_is_deterministic() {
    let args = [
        "verify", "lemma4", "--trials", "12", "--seed", "5", "--json",
    ];
    let a = twbound(&args);
    let b = twbound(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["trials"], 12);
}

#[test]
fn wall_pipeline_via_files() {
    let dir = TempDir::new().unwrap();
    let w2 = write(&dir, "w2.g6", &stdout(&twbound(&["wall", "2"])));
    let model = dir.path().join("lsg.model");
    let lsg = twbound(&["lsg", s(&w2), "--model", s(&model)]);
    assert_eq!(lsg.status.code(), Some(0));
    let host = write(&dir, "host.g6", &stdout(&lsg));
    let out = twbound(&[
        "verify",
        "theorem5",
        "--host",
        s(&host),
        "--pattern",
        s(&w2),
        "--model",
        s(&model),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}{}",
        stdout(&out),
        stderr(&out)
    );
    let out = twbound(&[
        "verify",
        "theorem5",
        "--host",
        s(&host),
        "--pattern",
        s(&w2),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}{}",
        stdout(&out),
        stderr(&out)
    );
}

#[test]
fn inconclusive_and_failed_answers_exit_one() {
    let dir = TempDir::new().unwrap();
    let p5 = write(&dir, "p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    let out = twbound(&[
        "verify",
        "theorem5",
        "--host",
        s(&p5),
        "--pattern",
        s(&p5),
        "--k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("INCONCLUSIVE"));

    let k4 = write(&dir, "k4.g6", "C~\n");
    let out = twbound(&["profile", s(&k4), "--bound=-2,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("violation"));
}

#[test]
fn minor_and_minimize() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let c4 = write(&dir, "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let k4 = write(&dir, "k4.g6", "C~\n");
    let model = dir.path().join("m.txt");
    let out = twbound(&[
        "minor",
        "--pattern",
        s(&c4),
        "--host",
        s(&c5),
        "--induced",
        "--out",
        s(&model),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = twbound(&["minimize", "--model", s(&model), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["minimal"], true);

    let out = twbound(&["minor", "--pattern", s(&k4), "--host", s(&c5)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "no model\n");
}

#[test]
fn majorant_and_profile() {
    let out = twbound(&["majorant", "--poly", "2,-3,1"]);
    assert_eq!(stdout(&out), "x^2 + 2\n");
    let out = twbound(&["majorant", "--poly", "1,1", "--compose", "0,0,1"]);
    assert_eq!(stdout(&out), "x + 1\n9x^2 + 12x + 4\n");

    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let out = twbound(&["profile", s(&c5)]);
    assert_eq!(stdout(&out), "omega,treewidth\n0,-1\n1,0\n2,2\n");
}

#[test]
fn errors_exit_two_with_distinct_messages() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.g6");
    let out = twbound(&["treewidth", s(&missing)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot read"));

    let bad = write(&dir, "bad.g6", "C!!\n");
    let out = twbound(&["treewidth", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot parse a graph"));

    let big = write(&dir, "big.txt", "13 0\n");
    let out = twbound(&["profile", s(&big)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("resource limit"));

    let out = twbound(&["verify", "obs7", "--ell", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid argument"));

    let out = twbound(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = twbound(&["majorant", "--poly", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
}
