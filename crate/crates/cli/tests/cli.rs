use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn pdrkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdrkit"))
        .args(args)
        .env_remove("PDRKIT_EPS_GROUP")
        .env_remove("PDRKIT_EPS_MULT")
        .env_remove("PDRKIT_EPS_PDR")
        .env_remove("PDRKIT_EPS_WALK")
        .output()
        .expect("run pdrkit")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn summary(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let last = text.lines().last().expect("summary line");
    serde_json::from_str::<Value>(last).unwrap()["summary"].clone()
}

fn graph6_of(named: &str) -> String {
    json(&pdrkit(&["analyze", "--named", named]))["input"].as_str().unwrap().to_string()
}

#[test]
fn analyze_petersen() {
    let v = json(&pdrkit(&["analyze", "--named", "petersen"]));
    assert_eq!(v["n"], 10);
    assert_eq!(v["edge_count"], 15);
    assert_eq!(v["classification"]["verdict"], "distance_regular");
    assert_eq!(v["classification"]["intersection_arrays"][0]["array"], "{3,2;1,1}");
    assert_eq!(v["classification"]["walk_regularity"], "walk_regular");
    let spectrum: Vec<(f64, u64)> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["eigenvalue"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(spectrum, [(3.0, 1), (1.0, 5), (-2.0, 4)]);
    let first = &v["per_vertex"][0];
    assert_eq!(first["is_pdr"], true);
    assert_eq!(first["intersection_numbers"]["c"], serde_json::json!([0, 1, 1]));
    assert_eq!(first["intersection_numbers"]["b"], serde_json::json!([3, 2, 0]));
}

#[test]
fn analyze_triangle_by_graph6() {
    let v = json(&pdrkit(&["analyze", "Bw"]));
    assert_eq!(v["classification"]["verdict"], "distance_regular");
    assert_eq!(v["classification"]["intersection_arrays"][0]["array"], "{2;1}");
    assert_eq!(v["per_vertex"][0]["local_mults"], serde_json::json!([0.333333333333, 0.666666666667]));
}

#[test]
fn analyze_path_is_biregular() {
    let v = json(&pdrkit(&["analyze", "Bg"]));
    let cl = &v["classification"];
    assert_eq!(cl["verdict"], "distance_biregular");
    assert_eq!(cl["walk_regularity"], "walk_biregular");
    let alphas: Vec<f64> = cl["intersection_arrays"].as_array().unwrap().iter().map(|p| p["alpha"].as_f64().unwrap()).collect();
    let mut expected = [0.75f64.sqrt(), 1.5f64.sqrt()];
    expected.sort_by(f64::total_cmp);
    let mut got = alphas.clone();
    got.sort_by(f64::total_cmp);
    for (a, b) in got.iter().zip(expected) {
        assert!((a - b).abs() < 1e-9, "{alphas:?}");
    }
}

#[test]
fn analyze_p4_reports_witness() {
    let v = json(&pdrkit(&["analyze", "--named", "path:4"]));
    let cl = &v["classification"];
    assert_eq!(cl["verdict"], "not_pdr");
    let vertex = cl["witness"]["vertex"].as_u64().unwrap();
    assert!(vertex == 1 || vertex == 2);
    let values = cl["witness"]["partition"]["values"].as_array().unwrap();
    let gap = (values[0].as_f64().unwrap() - values[1].as_f64().unwrap()).abs();
    assert!(gap >= 0.5);
}

#[test]
fn spectrum_with_vertex() {
    let v = json(&pdrkit(&["spectrum", "Bg", "--vertex", "1"]));
    assert_eq!(v["local"]["local_mults"], serde_json::json!([0.5, 0.0, 0.5]));
    let plain = json(&pdrkit(&["spectrum", "--named", "complete:4"]));
    assert!(plain.get("local").is_none());
    assert_eq!(plain["spectrum"][1]["multiplicity"], 3);
}

#[test]
fn verify_enumerated_corpora() {
    let out = pdrkit(&["verify", "--enumerate", "4"]);
    assert!(out.status.success());
    let s = summary(&out);
    assert_eq!(s["total"], 38);
    assert_eq!(s["violations"], 0);
    assert_eq!(s["errors"], 0);
    assert_eq!(s["distance_regular"], 4);
    assert_eq!(s["distance_biregular"], 4);

    let out = pdrkit(&["verify", "--enumerate", "1", "--jsonl"]);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 2);
    let record: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(record["input"], "@");
    assert_eq!(record["verdict"], "distance_regular");
    assert_eq!(summary(&out)["distance_regular"], 1);
}

#[test]
fn verify_catalog_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# distance-regular catalog").unwrap();
    for named in ["petersen", "cycle:5", "complete:4", "cycle:6", "complete_bipartite:3,3"] {
        writeln!(file, "{}", graph6_of(named)).unwrap();
        writeln!(file).unwrap();
    }
    let out = pdrkit(&["verify", file.path().to_str().unwrap(), "--jsonl"]);
    assert!(out.status.success());
    let s = summary(&out);
    assert_eq!(s["total"], 5);
    assert_eq!(s["distance_regular"], 5);
    assert_eq!(s["violations"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(pdrkit(&["analyze", "B~"]).status.code(), Some(2));
    assert_eq!(pdrkit(&["analyze", "B_"]).status.code(), Some(3));
    assert_eq!(pdrkit(&["analyze", "--named", "cycle:2"]).status.code(), Some(2));
    assert_eq!(pdrkit(&["spectrum", "Bw", "--vertex", "3"]).status.code(), Some(2));
    assert_eq!(pdrkit(&["analyze", "--named", "petersen", "--eps-group", "0.5"]).status.code(), Some(4));
    assert_eq!(pdrkit(&["verify", "/nonexistent/corpus.g6"]).status.code(), Some(2));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "Bw\nB_").unwrap();
    let out = pdrkit(&["verify", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let s = summary(&out);
    assert_eq!(s["total"], 2);
    assert_eq!(s["errors"], 1);
}

#[test]
fn tolerance_flag_beats_environment() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_pdrkit"));
        cmd.args(["analyze", "Bw"]);
        if let Some(x) = env {
            cmd.env("PDRKIT_EPS_PDR", x);
        }
        if let Some(x) = flag {
            cmd.args(["--eps-pdr", x]);
        }
        let v = json(&cmd.output().unwrap());
        v["tolerances"]["eps_pdr"].as_f64().unwrap()
    };
    assert_eq!(run(None, None), 1e-7);
    assert_eq!(run(Some("1e-5"), None), 1e-5);
    assert_eq!(run(Some("1e-5"), Some("1e-4")), 1e-4);
    assert_eq!(pdrkit(&["analyze", "Bw", "--eps-pdr", "-1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = pdrkit(&["verify", "--enumerate", "5", "--jsonl", "--jobs", "1"]);
    let b = pdrkit(&["verify", "--enumerate", "5", "--jsonl", "--jobs", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let x = pdrkit(&["analyze", "--named", "hypercube:3"]);
    let y = pdrkit(&["analyze", "--named", "hypercube:3"]);
    assert_eq!(x.stdout, y.stdout);
}
