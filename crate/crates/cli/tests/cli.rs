use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperspectra"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn gen_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn values(report: &Value) -> Vec<(f64, u64)> {
    report["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect()
}

#[test]
fn gen_then_spectrum_round_trip() {
    let g = run(&["gen", "complete-uniform", "--m", "3", "--n", "4"]);
    assert_eq!(g.status.code(), Some(0));
    let s = run_with_stdin(&["spectrum", "--in", "-"], &g.stdout);
    assert_eq!(s.status.code(), Some(0));
    let v = values(&json(&s));
    assert_eq!(v.len(), 2);
    assert!((v[0].0 + 1.0).abs() < 1e-10 && v[0].1 == 3);
    assert!((v[1].0 - 3.0).abs() < 1e-10 && v[1].1 == 1);
}

#[test]
fn exact_and_numeric_spectra_agree() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "lp.json", &["loose-path", "--m", "4", "--s", "1", "--n", "3"]);
    let a = values(&json(&run(&["spectrum", "--in", &p])));
    let b = values(&json(&run(&["spectrum", "--in", &p, "--exact"])));
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!((x.0 - y.0).abs() < 1e-8);
        assert_eq!(x.1, y.1);
    }
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "mp.json", &["multipartite", "--m", "3", "--sizes", "1,2,2"]);
    let a = run(&["spectrum", "--in", &p]);
    let b = run(&["spectrum", "--in", &p]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["charpoly", "--in", &p]);
    let d = run(&["charpoly", "--in", &p]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn charpoly_of_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "c3.json", &["cycle", "--n", "3"]);
    let v = json(&run(&["charpoly", "--in", &p]));
    // x^3 - 3x - 2
    let coeffs: Vec<&str> = v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["-2", "-3", "0", "1"]);
}

#[test]
fn verify_remark1_passes() {
    let out = run(&["verify", "remark1", "--m", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "PASS");
}

#[test]
fn verify_all_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&["verify-all", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r["verdict"] == "PASS"));
}

#[test]
fn published_constants_are_documented_not_failed() {
    let out = run(&["verify-all", "--only", "cor3,cor4", "--include-paper-constants"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for r in v.as_array().unwrap() {
        assert_eq!(r["verdict"], "DISCREPANCY-DOCUMENTED");
    }
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    assert_eq!(run(&["verify", "thm99"]).status.code(), Some(1));
    assert_eq!(run(&["verify-all", "--only", "thm99"]).status.code(), Some(1));
}

#[test]
fn missing_file_exits_one_with_code() {
    let out = run(&["spectrum", "--in", "/nonexistent/h.json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "FileNotFound");
}

#[test]
fn malformed_input_exits_one() {
    let out = run_with_stdin(&["spectrum", "--in", "-"], b"{\"n\": 2, \"edges\": [[[1, 3], 1]]}");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumeration_guard_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let e = gen_to(dir.path(), "e.json", &["empty", "--m", "3", "--n", "5"]);
    let out = run(&["--max-enum", "8", "join", "--members", &format!("{e},{e}"), "--m", "3"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn join_check_formula_passes() {
    let dir = tempfile::tempdir().unwrap();
    let e1 = gen_to(dir.path(), "e1.json", &["empty", "--m", "3", "--n", "1"]);
    let e2 = gen_to(dir.path(), "e2.json", &["empty", "--m", "3", "--n", "2"]);
    let out = run(&["join", "--members", &format!("{e1},{e1},{e2}"), "--m", "3", "--check-formula"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hypergraph"]["n"], 4);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "PASS"));

    let c4 = gen_to(dir.path(), "c4.json", &["cycle", "--n", "4"]);
    let parts = [e2.as_str(); 4].join(",");
    let out = run(&["join", "--backbone", &c4, "--participants", &parts, "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    // four crossing triples per backbone edge
    assert_eq!(json(&out)["edges"].as_array().unwrap().len(), 16);
}

#[test]
fn nonuniform_join_weights() {
    let dir = tempfile::tempdir().unwrap();
    let e2 = gen_to(dir.path(), "e2.json", &["empty", "--m", "3", "--n", "2"]);
    let out = run(&[
        "join",
        "--members",
        &format!("{e2},{e2}"),
        "--weights",
        "2:1,3:1/2",
        "--check-formula",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let bad = run(&["join", "--members", &format!("{e2},{e2}"), "--weights", "1:1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn partition_orbits_and_refinement() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "lp.json", &["loose-path", "--m", "3", "--s", "1", "--n", "3"]);
    let a = json(&run(&["partition", "--in", &p]));
    let b = json(&run(&["partition", "--in", &p, "--orbits"]));
    assert_eq!(a["equitable"], true);
    assert_eq!(a["cells"], b["cells"]);
    assert!(a["B"].is_array());

    let cells = dir.path().join("cells.json");
    std::fs::write(&cells, "[[1,2,3,4,5,6,7]]").unwrap();
    let c = json(&run(&["partition", "--in", &p, "--cells", cells.to_str().unwrap()]));
    assert_eq!(c["equitable"], false);
    assert!(c.get("B").is_none());
}

#[test]
fn corona_spectrum_and_constants() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = gen_to(dir.path(), "k4.json", &["complete-uniform", "--m", "3", "--n", "4"]);
    let e2 = gen_to(dir.path(), "e2.json", &["empty", "--m", "3", "--n", "2"]);
    for kind in ["vertex", "edge"] {
        let out = run(&["corona", kind, "--base", &k4, "--members", &e2, "--spectrum"]);
        assert_eq!(out.status.code(), Some(0), "{kind}");
        assert_eq!(json(&out)["verdict"], "PASS");
    }
    let c = json(&run(&["corona", "constants", "--kind", "edge", "--m", "3", "--n1", "2", "--n", "4"]));
    assert_eq!(c["oracle"]["a"], c["formula"]["a"]);
    assert_eq!(c["oracle"]["b"], c["formula"]["b"]);
    assert_eq!(c["oracle"]["c"], c["formula"]["c"]);
}

#[test]
fn cospectral_pair_and_switch() {
    let dir = tempfile::tempdir().unwrap();
    let (h0, g0) = hyperspectra::cospectral::example_pair();
    let hp = dir.path().join("h0.json");
    let gp = dir.path().join("g0.json");
    std::fs::write(&hp, h0.to_json_string()).unwrap();
    std::fs::write(&gp, g0.to_json_string()).unwrap();
    let (hs, gs) = (hp.to_str().unwrap(), gp.to_str().unwrap());

    let out = run(&["cospectral", "--a", hs, "--b", gs, "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cospectral"], true);

    let cells = dir.path().join("cells.json");
    std::fs::write(&cells, "[[1,2,3,4,5,6]]").unwrap();
    let out = run(&["switch", "--in", hs, "--cells", cells.to_str().unwrap(), "--d", "7,8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let switched = hyperspectra::Hypergraph::from_json_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(switched.edges(), g0.edges());

    let k4 = gen_to(dir.path(), "k4.json", &["complete-uniform", "--m", "3", "--n", "4"]);
    let out = run(&["cospectral", "--a", hs, "--b", &k4]);
    assert_eq!(out.status.code(), Some(1), "different orders are an error");

    let e1 = gen_to(dir.path(), "e1.json", &["empty", "--m", "3", "--n", "1"]);
    let out = run(&["cospectral", "family", "--h0", hs, "--g0", gs, "--attach", &e1, "--depth", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let pairs = json(&out);
    assert_eq!(pairs.as_array().unwrap().len(), 2);
}

#[test]
fn table_format_renders_text() {
    let out = run(&["--format", "table", "verify", "cor6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cor6") && text.contains("PASS"));
}

#[test]
fn help_exits_zero_and_bad_flag_exits_one() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["gen", "path"]).status.code(), Some(1));
}
