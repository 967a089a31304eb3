use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use curvelab::arc2::{classify, ArcSearch, Kind};
use curvelab::sphere5::window::build_window;
use serde_json::Value;

fn curvelab(args: &[&str], cache: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_curvelab"));
    c.args(args);
    match cache {
        Some(d) => c.env("CURVELAB_CACHE", d),
        None => c.env_remove("CURVELAB_CACHE"),
    };
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn farey_dist_prints_three() {
    let o = curvelab(&["farey", "dist", "2/5", "1/0"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n");
    let o = curvelab(&["farey", "dist", "2/5", "1/0", "--format", "json"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["distance"], 3);
    assert_eq!(v["from"], "2/5");
}

#[test]
fn verify_passes_at_power_eight() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let o = curvelab(
        &[
            "verify", "--instance", "farey", "--height", "55", "--matrix", "2,1,1,1", "--power", "8", "--conj-len", "2",
            "--suites", "simplicial,lift,covering", "--out", out.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<Value> = serde_json::from_str(&fs::read_to_string(out.join("reports.json")).unwrap()).unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn power_one_is_out_of_hypothesis_and_exits_zero() {
    let o = curvelab(&["verify", "--suites", "simplicial", "--power", "1", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports[0]["status"], "out-of-hypothesis");
    assert_eq!(reports[0]["min_displacement"], 1);
}

#[test]
fn bad_input_exit_codes() {
    // usage errors come from the argument parser
    assert_eq!(curvelab(&["verify", "--suites", "nonsense"], None).status.code(), Some(2));
    assert_eq!(curvelab(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(curvelab(&["farey", "dist", "2/x", "1/0"], None).status.code(), Some(3));
    assert_eq!(curvelab(&["verify", "--suites", "support"], None).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let o = curvelab(&["s5", "pentagons", "--window", bad.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());

    // a well-formed window whose curve does not match its witness
    let o = curvelab(&["s5", "ball", "--bound", "1"], None);
    let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
    v["vertices"][3]["key"][0] = Value::from(v["vertices"][3]["key"][0].as_i64().unwrap() + 2);
    fs::write(&bad, v.to_string()).unwrap();
    let o = curvelab(&["s5", "pentagons", "--window", bad.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(3));

    let missing = dir.path().join("missing.json");
    let o = curvelab(&["arc2", "classify", "--curves", "0,1,2", "--window", missing.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cache_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    for instance in [["--instance", "farey", "--height", "34"], ["--instance", "s5", "--bound", "3"]] {
        let args: Vec<&str> = ["verify"].into_iter().chain(instance).chain(["--format", "json"]).collect();
        let cold = curvelab(&args, None);
        let miss = curvelab(&args, Some(&cache));
        let hit = curvelab(&args, Some(&cache));
        assert!(cold.status.success());
        assert_eq!(cold.stdout, miss.stdout);
        assert_eq!(miss.stdout, hit.stdout);
    }
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 2);

    // a corrupted entry is rebuilt, not trusted
    for e in fs::read_dir(&cache).unwrap() {
        fs::write(e.unwrap().path(), "garbage").unwrap();
    }
    let args = ["verify", "--height", "34", "--format", "json"];
    assert_eq!(curvelab(&args, Some(&cache)).stdout, curvelab(&args, None).stdout);
}

#[test]
fn artifacts_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = curvelab(&["verify", "--instance", "s5", "--bound", "3", "--out", out.to_str().unwrap()], None);
        assert!(o.status.success());
        fs::read(out.join("reports.json")).unwrap()
    };
    assert_eq!(run("a"), run("b"));
    let q = |args: &[&str]| curvelab(args, None).stdout;
    let build = ["quotient", "build", "--height", "21", "--power", "8"];
    assert_eq!(q(&build), q(&build));
    assert!(q(&build).ends_with(b"}\n"));
}

#[test]
fn formats() {
    let o = curvelab(&["farey", "window", "--height", "3", "--format", "dot"], None);
    assert!(stdout(&o).starts_with("graph farey {"));
    let o = curvelab(&["farey", "window", "--height", "3", "--format", "text"], None);
    assert!(stdout(&o).starts_with("farey window of height 3:"));
    let o = curvelab(&["farey", "closure", "--format", "dot"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = curvelab(&["farey", "displacement", "--height", "21", "--format", "json"], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["min"], 8);
}

#[test]
fn s5_pentagons_and_halftwists() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w3.json");
    assert!(curvelab(&["s5", "ball", "--word-bound", "3", "--out", w.to_str().unwrap()], None).status.success());
    let o = curvelab(&["s5", "pentagons", "--window", w.to_str().unwrap()], None);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 379);
    assert_eq!(v["invalid"].as_array().unwrap().len(), 0);

    let o = curvelab(&["s5", "halftwist", "--bound", "4", "--samples", "6"], None);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 6);
    assert!(v["pairs"].as_array().unwrap().iter().all(|r| r["status"] == "pass"));

    // a disjoint pair has no half-twist
    let o = curvelab(&["s5", "halftwist", "--window", w.to_str().unwrap(), "--alpha", "0", "--beta", "1"], None);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn arc2_fill_writes_a_certified_filling() {
    let dir = tempfile::tempdir().unwrap();
    let wpath = dir.path().join("w5.json");
    assert!(curvelab(&["s5", "ball", "--bound", "5", "--out", wpath.to_str().unwrap()], None).status.success());

    let w = build_window(5);
    let s = ArcSearch::new(&w).unwrap();
    let ids: Vec<usize> = build_window(2).vertices.iter().map(|k| w.index_of(k).unwrap()).collect();
    let t = s.triangles(&ids).unwrap().into_iter().find(|&t| classify(&s, t).unwrap().kind == Kind::Case2).unwrap();
    let curves = format!("{},{},{}", t[0], t[1], t[2]);

    let fill = dir.path().join("fill.json");
    let o = curvelab(
        &["arc2", "fill", "--curves", &curves, "--window", wpath.to_str().unwrap(), "--out", fill.to_str().unwrap()],
        None,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&fill).unwrap()).unwrap();
    assert_eq!(v["kind"], "case2");
    assert_eq!(v["certified"], true);
    let ps = v["pentagons"].as_array().unwrap();
    assert_eq!(ps.len(), 2);
    assert!(ps.iter().all(|p| p.as_array().unwrap().len() == 5));

    let o = curvelab(&["arc2", "classify", "--curves", &curves, "--window", wpath.to_str().unwrap(), "--format", "text"], None);
    assert!(stdout(&o).starts_with("case2 "));
    let o = curvelab(&["arc2", "classify", "--curves", "0,1", "--window", wpath.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(3));
}
