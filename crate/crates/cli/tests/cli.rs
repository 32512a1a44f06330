use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn corpus(name: &str) -> PathBuf {
    root().join("corpus").join(format!("{name}.alg"))
}

fn extdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extdim")).args(args).env_remove("EXTDIM_CORPUS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn explicit_subset_report() {
    let o = extdim(&["report", p(&corpus("spider5")), "--subsets", "explicit", "2,3,4,5"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["best"]["bound"], 3);
    assert_eq!(r["best"]["members"], serde_json::json!([2, 3, 4, 5]));
    assert_eq!(r["seeds"]["decompose"], 0xE3D1);
    assert!(r.get("wall_clock_ms").is_none());
}

#[test]
fn endpoint_report() {
    let r = json(&extdim(&["report", p(&corpus("spider5")), "--subsets", "endpoints"]));
    let bounds: Vec<i64> = r["subsets"].as_array().unwrap().iter().map(|s| s["bound"].as_i64().unwrap()).collect();
    assert_eq!(bounds, vec![4, 4]);
}

#[test]
fn exterior_report_is_infinite_with_bound_two() {
    let r = json(&extdim(&["report", p(&corpus("exterior2"))]));
    assert_eq!(r["global_dimension"]["kind"], "infinite");
    assert_eq!(r["best"]["bound"], 2);
    assert_eq!(r["annotations"].as_array().unwrap().len(), 1);
}

#[test]
fn reports_are_byte_identical() {
    let a = extdim(&["report", p(&corpus("four_vertex"))]);
    let b = extdim(&["report", p(&corpus("four_vertex"))]);
    assert_eq!(a.stdout, b.stdout);
    let t = json(&extdim(&["report", p(&corpus("four_vertex")), "--timing"]));
    assert!(t.get("wall_clock_ms").is_some());
}

#[test]
fn csv_table() {
    let o = extdim(&["report", p(&corpus("a3_f2")), "--csv"]);
    assert_eq!(stdout(&o), "vertex,pd_simple,ll_projective\n1,1,0\n2,1,0\n3,0,0\n");
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "field Q\nvertices 2\narrow a : 1 -> 7\n").unwrap();
    let o = extdim(&["report", p(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.alg"));
    assert_eq!(extdim(&["report", "missing.alg"]).status.code(), Some(2));
}

#[test]
fn corpus_run_passes_and_flags_mismatches() {
    let dir = root().join("corpus");
    let o = extdim(&["corpus", "--dir", p(&dir), "run"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS spider7"));

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(extdim(&["corpus", "--dir", p(empty.path()), "run"]).status.code(), Some(0));

    let wrong = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(corpus("spider5")).unwrap().replace("global_dimension = 4", "global_dimension = 3");
    std::fs::write(wrong.path().join("spider5.alg"), text).unwrap();
    let o = extdim(&["corpus", "--dir", p(wrong.path()), "run"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("global_dimension expected 3 computed 4"));
}

#[test]
fn corpus_env_var_and_add() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_extdim"))
        .args(["corpus", "add", p(&corpus("a2_f2")), "--name", "a2"])
        .env("EXTDIM_CORPUS", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let list = Command::new(env!("CARGO_BIN_EXE_extdim"))
        .args(["corpus", "list"])
        .env("EXTDIM_CORPUS", dir.path())
        .output()
        .unwrap();
    assert!(stdout(&list).starts_with("a2\tvertices=2"));
    let again = extdim(&["corpus", "--dir", p(dir.path()), "add", p(&corpus("a2_f2")), "--name", "a2"]);
    assert_eq!(again.status.code(), Some(2));

    let untagged = dir.path().join("untagged.alg");
    std::fs::write(&untagged, "field Q\nvertices 1\ngolden {\n  dimension = 1\n}\n").unwrap();
    assert_eq!(extdim(&["corpus", "--dir", p(dir.path()), "add", p(&untagged)]).status.code(), Some(2));
}

#[test]
fn certificate_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("s1.json");
    let o = extdim(&["certify", "make", p(&corpus("spider5")), "--thm319", "-S", "2,3,4,5", "-M", "simple:1", "-o", p(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    let v = extdim(&["certify", "verify", p(&cert)]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).starts_with("OK depth"));

    let mut c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let entry = c["modules"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .flat_map(|m| m["maps"].as_array_mut().unwrap().iter_mut())
        .flat_map(|mat| mat.as_array_mut().unwrap().iter_mut())
        .flat_map(|row| row.as_array_mut().unwrap().iter_mut())
        .find(|x| x.as_str() == Some("1"))
        .unwrap();
    *entry = Value::String("0".into());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&c).unwrap()).unwrap();
    let v = extdim(&["certify", "verify", p(&bad)]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).starts_with("FAIL at root/"));
}

#[test]
fn resolution_certificate_from_job() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("r.json");
    let job = root().join("jobs/a2_resolution.job");
    let o = extdim(&["certify", "make", p(&job), "--lemma33", "R", "-o", p(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&extdim(&["certify", "verify", p(&cert), "--json"]));
    assert_eq!(v["valid"], true);
    assert_eq!(v["claimed_depth"], 2);
}

#[test]
fn omega_and_search() {
    let o = extdim(&["omega", p(&corpus("spider5")), "-M", "simple:1", "-k", "1"]);
    assert!(stdout(&o).starts_with("module Omega1 { dim = [0,1,1,1,1,1,0,0,0,1,1]"));
    let o = extdim(&["omega", p(&corpus("dual_numbers")), "-M", "simple:1", "-k", "-1"]);
    assert_eq!(stdout(&o), "module Omegam1 { dim = [1]; }\n");
    let s = json(&extdim(&["search", "extdim", p(&corpus("a2_f2")), "--json"]));
    assert_eq!(s["estimate"]["kind"], "exactly");
    assert_eq!(s["indecomposables"].as_array().unwrap().len(), 3);
    let m = json(&extdim(&["search", "membership", p(&corpus("a2_f2")), "-M", "projective:1", "-n", "1", "--json"]));
    assert_eq!(m["status"], "found");
    assert_eq!(extdim(&["search", "extdim", p(&corpus("spider5"))]).status.code(), Some(2));
}
