use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hamsq(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hamsq"))
        .args(args)
        .env_remove("HAMSQ_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn generate(family: &str) -> String {
    let o = hamsq(&["generate", "--family", family], None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn figure1_decides_and_verifies() {
    let g = file(&generate("figure1"));
    let o = hamsq(&["decide", path(&g)], None);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["decision"], "hamiltonian");
    assert_eq!(doc["cycle"].as_array().unwrap().len(), 10);
    let cert = file(&String::from_utf8(o.stdout).unwrap());
    let v = hamsq(&["verify", path(&g), path(&cert)], None);
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["ok"], true);
}

#[test]
fn subdivided_claw_is_refused_at_its_center() {
    let o = hamsq(&["decide", "-"], Some(&generate("star-cut:2,2/2,2/2,2")));
    assert_eq!(code(&o), 2);
    let doc = json(&o);
    assert_eq!(doc["witness"]["kind"], "acyclic_non_end_blocks");
    assert_eq!(doc["witness"]["vertex"], "0");
    assert_eq!(doc["witness"]["t"], 3);
}

#[test]
fn figure2_regression() {
    let g = generate("figure2:3,3,3,3,3");
    let o = hamsq(&["decide", "-"], Some(&g));
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["preconditions"]["violations"][0]["degree"], 5);
    // Above the default cap of 12 the oracle refuses...
    let o = hamsq(&["decide", "-", "--mode", "oracle"], Some(&g));
    assert_eq!(code(&o), 4);
    assert_eq!(json(&o)["decision"], "budget_exceeded");
    // ...and with the cap raised it finds no cycle.
    let o = hamsq(&["decide", "-", "--mode", "oracle", "--cap", "17"], Some(&g));
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["witness"]["kind"], "oracle_exhausted");
}

#[test]
fn cap_from_environment() {
    let g = generate("figure2:3,3,3,3,3");
    let mut child = Command::new(env!("CARGO_BIN_EXE_hamsq"))
        .args(["decide", "-", "--mode", "oracle"])
        .env("HAMSQ_CAP", "17")
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(g.as_bytes()).unwrap();
    assert_eq!(child.wait().unwrap().code(), Some(2));
}

#[test]
fn tiny_budget_is_reported() {
    let o = hamsq(&["decide", "-", "--mode", "oracle", "--budget", "1"], Some(&generate("figure1")));
    assert_eq!(code(&o), 4);
    let doc = json(&o);
    assert_eq!(doc["decision"], "budget_exceeded");
    assert_eq!(doc["witness"]["budget"], 1);
}

#[test]
fn tampered_certificate_fails_verification() {
    let g = file(&generate("figure1"));
    let mut doc = json(&hamsq(&["decide", path(&g)], None));
    doc["cycle"].as_array_mut().unwrap().remove(3);
    doc["edge_provenance"].as_array_mut().unwrap().remove(3);
    let cert = file(&doc.to_string());
    let v = hamsq(&["verify", path(&g), path(&cert)], None);
    assert_eq!(code(&v), 1);
    let report = json(&v);
    let kinds: Vec<&str> = report["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"NotHamiltonian"), "{kinds:?}");
}

#[test]
fn constructions_by_name() {
    let f1 = generate("figure1");
    let o = hamsq(&["construct", "-", "--theorem", "lemma1"], Some(&f1));
    assert_eq!(code(&o), 0);
    let o = hamsq(&["construct", "-", "--theorem", "main"], Some(&f1));
    assert_eq!(code(&o), 0);
    let o = hamsq(&["construct", "-", "--theorem", "star-block"], Some(&f1));
    assert_eq!(code(&o), 3);

    let path_graph = generate("block-path:k3,2,c4");
    let o = hamsq(&["construct", "-", "--theorem", "thomassen"], Some(&path_graph));
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = hamsq(&["construct", "-", "--theorem", "thomassen", "--anchors", "0,1"], Some(&path_graph));
    assert_eq!(code(&o), 3);

    let star = generate("star-cut:k3/k3/k3");
    let g = file(&star);
    let o = hamsq(&["construct", path(&g), "--theorem", "lemma1", "--anchors", "0"], None);
    assert_eq!(code(&o), 0);
    let cert = file(&String::from_utf8(o.stdout).unwrap());
    assert_eq!(code(&hamsq(&["verify", path(&g), path(&cert)], None)), 0);
}

#[test]
fn star_block_construction() {
    let g = "graph tri 5 5\n0 1\n1 2\n0 2\n0 3\n1 4\n";
    let o = hamsq(&["construct", "-", "--theorem", "star-block"], Some(g));
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["cycle"].as_array().unwrap().len(), 5);
}

#[test]
fn classify_and_oracle() {
    let f1 = generate("figure1");
    let o = hamsq(&["classify", "-", "--vertex", "v1"], Some(&f1));
    assert_eq!(code(&o), 0);
    let t = json(&o)["type"].as_u64().unwrap();
    assert!((1..=4).contains(&t));

    let o = hamsq(&["oracle", "-", "--require-edges", "v1-v2", "--forbid-edges", "v2-v3"], Some(&f1));
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["found"], true);

    // v3 is a leaf; its only graph edge is v2v3, and forbidding every
    // square edge at it leaves no cycle.
    let o = hamsq(&["oracle", "-", "--forbid-edges", "v3-v1,v3-v4"], Some(&f1));
    assert_eq!(code(&o), 2);

    let o = hamsq(&["classify", "-", "--vertex", "nope"], Some(&f1));
    assert_eq!(code(&o), 64);
}

#[test]
fn analyze_reports_structure() {
    let o = hamsq(&["analyze", "-"], Some(&generate("figure1")));
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["blocks"].as_array().unwrap().len(), 6);
    let cuts: Vec<&str> = doc["cut_vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["vertex"].as_str().unwrap())
        .collect();
    assert_eq!(cuts, ["v1", "v2", "v5", "v9"]);
    assert_eq!(doc["shape"]["kind"], "star_at_cut_vertex");
    assert_eq!(doc["preconditions"]["in_class"], true);
}

#[test]
fn generate_is_reproducible() {
    let a = generate("random:7,9");
    assert_eq!(a, generate("random:7,9"));
    assert!(a.starts_with("graph random_7_9 9 "));
    assert_eq!(generate("block-path:2,2,2"), "graph block_path 4 3\n0 1\n1 2\n2 3\n");
}

#[test]
fn export_dot_highlights_cycle() {
    let g = file(&generate("figure1"));
    let cert = file(&String::from_utf8(hamsq(&["decide", path(&g)], None).stdout).unwrap());
    let o = hamsq(&["export-dot", path(&g), "--square", "--certificate", path(&cert)], None);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("graph \"figure1\" {"));
    assert_eq!(dot.matches("color=red").count(), 10);
    assert!(dot.contains("style=dashed"));
}

#[test]
fn explore_small() {
    let o = hamsq(&["explore-conjecture", "--max-block", "3", "--legs", "3"], None);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["instances"], 63);
    assert_eq!(doc["non_hamiltonian"], 0);
}

#[test]
fn error_exit_codes() {
    assert_eq!(code(&hamsq(&["decide", "-"], Some("graph g 3 1\na b\n"))), 65);
    assert_eq!(code(&hamsq(&["decide", "-"], Some("graph g 4 2\na b\nc d\n"))), 65);
    assert_eq!(code(&hamsq(&["decide", "/no/such/file.el"], None)), 66);
    assert_eq!(code(&hamsq(&["frobnicate"], None)), 64);
    assert_eq!(code(&hamsq(&["decide"], None)), 64);
    assert_eq!(code(&hamsq(&["generate", "--family", "figure2:1,2,3,4,5"], None)), 64);
    assert_eq!(code(&hamsq(&["generate", "--family", "nope"], None)), 64);
    let g = file(&generate("figure1"));
    assert_eq!(code(&hamsq(&["verify", path(&g), "-"], Some("{not json"))), 65);
    assert_eq!(code(&hamsq(&["--help"], None)), 0);
}
