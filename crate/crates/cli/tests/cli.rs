use std::path::PathBuf;
use std::process::Command;

use geomgraph::complex::{named, regions, RegionData};
use geomgraph::graph::{named as graphs, to_text};
use geomgraph::Graph;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_geomgraph"));
    c.env_remove("GEOMGRAPH_THREADS");
    c
}

fn fixture(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    // tests run in parallel and share fixtures, so never expose a partial file
    let tmp = dir.join(format!("{name}.{:?}", std::thread::current().id()));
    std::fs::write(&tmp, contents).unwrap();
    std::fs::rename(&tmp, &path).unwrap();
    path
}

fn graph_file(name: &str, g: &Graph) -> PathBuf {
    fixture(name, &to_text(g))
}

fn tetra_regions() -> PathBuf {
    let data = RegionData {
        regions: vec![vec![0, 1, 2, 3], vec![0, 1, 2, 3]],
    };
    let c = regions(&named::tetrahedron_boundary(), Some(&data)).unwrap();
    fixture("tetra_regions.cx", &serde_json::to_string(&c).unwrap())
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = bin().args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

fn p(path: &PathBuf) -> &str {
    path.to_str().unwrap()
}

#[test]
fn graph_commands() {
    let petersen = graph_file("petersen.g", &graphs::petersen());
    let (code, j, _) = run(&["graph", "connectivity", p(&petersen)]);
    assert_eq!((code, j["kappa"].as_u64()), (0, Some(3)));
    let (_, j, _) = run(&["graph", "layers", p(&petersen), "--root", "0"]);
    assert_eq!(j["sizes"], serde_json::json!([1, 3, 6]));
    let k4 = graph_file("k4.g", &graphs::complete(4));
    let (_, j, _) = run(&["graph", "contract", p(&k4), "--edge", "0", "1"]);
    assert_eq!(j["n"], 3);
    assert_eq!(j["edges"].as_array().unwrap().len(), 3);
    let (_, j, _) = run(&["graph", "layers", p(&petersen), "--root", "0"]);
    assert_eq!(j["manifest"]["parameters"]["root"], 0);
}

#[test]
fn minor_and_complex_commands() {
    let petersen = graph_file("petersen.g", &graphs::petersen());
    let (code, j, _) = run(&["minor", "clique", p(&petersen), "--t", "6"]);
    assert_eq!(code, 1);
    assert_eq!(j["found"], false);
    let (code, j, _) = run(&["minor", "clique", p(&petersen), "--t", "5"]);
    assert_eq!(code, 0);
    assert_eq!(j["model_check"]["valid"], true);
    let k6 = graph_file("k6.g", &graphs::complete(6));
    let (code, j, _) = run(&["complex", "raise", p(&k6), "--x", "2", "--mode", "triangulated"]);
    assert_eq!(code, 0);
    assert_eq!(j["face_vector"], serde_json::json!([6, 15, 20]));
}

#[test]
fn discharge_run_reports_conservation() {
    let cx = tetra_regions();
    let (code, j, _) = run(&["discharge", "run", p(&cx), "--a", "3", "--b", "2", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(j["total"], "0");
    assert_eq!(j["conserved"], true);
    assert_eq!(j["stages"][0]["weights"]["1:0"], "-8");
    assert_eq!(j["stages"][0]["weights"]["0:0"], "12");
    assert_eq!(j["stages"][2]["stage"], "after_R2");
    let (code, j, _) = run(&["discharge", "quanhe", p(&cx)]);
    assert_eq!((code, j["quantity"].as_i64()), (0, Some(4)));
}

#[test]
fn exit_codes() {
    let bad = fixture("bad.g", "p graph 3 1\n0 7\n");
    let (code, j, err) = run(&["graph", "connectivity", p(&bad)]);
    assert_eq!(code, 2);
    assert_eq!(j["error"]["kind"], "input");
    assert!(err.contains("line 2"), "{err}");
    let path = graph_file("path.g", &graphs::path(5));
    let (code, j, _) = run(&["complex", "raise", p(&path), "--x", "2"]);
    assert_eq!(code, 3);
    assert_eq!(j["error"]["code"], "complex.insufficient-connectivity");
    let long = graph_file("path31.g", &graphs::path(31));
    let (code, j, _) = run(&["color", "exact", p(&long)]);
    assert_eq!(code, 4);
    assert_eq!(j["error"]["code"], "color.too-large");
}

#[test]
fn threads_flag_overrides_environment() {
    let k4 = graph_file("k4.g", &graphs::complete(4));
    let out = bin().env("GEOMGRAPH_THREADS", "3").args(["graph", "connectivity", p(&k4)]).output().unwrap();
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["manifest"]["threads"], 3);
    let out = bin()
        .env("GEOMGRAPH_THREADS", "3")
        .args(["--threads", "2", "graph", "connectivity", p(&k4)])
        .output()
        .unwrap();
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["manifest"]["threads"], 2);
}

#[test]
fn reruns_are_byte_identical() {
    let k6 = graph_file("k6.g", &graphs::complete(6));
    let petersen = graph_file("petersen.g", &graphs::petersen());
    let cx = tetra_regions();
    let cases: Vec<Vec<&str>> = vec![
        vec!["minor", "sample", "--n", "9", "--d", "2", "--seed", "4", "--budget", "5"],
        vec!["graph", "stacked-planar", "--n", "10", "--seed", "9"],
        vec!["complex", "raise", p(&k6), "--x", "3", "--mode", "certified"],
        vec!["color", "bound", p(&petersen), "--d", "4"],
        vec!["discharge", "run", p(&cx), "--a", "1", "--b", "1", "--d", "3"],
    ];
    for args in cases {
        let a = bin().args(&args).output().unwrap();
        let b = bin().args(&args).output().unwrap();
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
