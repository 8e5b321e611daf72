//! Black-box tests of the installed command-line interface: schemas, exit
//! codes, option handling, and byte-level determinism of the CSV artifacts.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bosegraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("output should be UTF-8")
}

#[test]
fn enumerate_prints_the_census() {
    let out = run(&["enumerate", "--sites", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("id,edges,edge_count,root_degree,triangles,root_triangles,bipartite\n"));

    let out4 = run(&["enumerate", "--sites", "4"]);
    assert_eq!(stdout(&out4).lines().count(), 12);
}

#[test]
fn enumerate_rejects_unsupported_sizes() {
    let out = run(&["enumerate", "--sites", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn sweep_emits_the_documented_schema() {
    let out = run(&[
        "sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "0.5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "eps,ep,t_star");
    assert_eq!(lines.len(), 4);
    let first: Vec<f64> = lines[1].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[1] - 0.921485).abs() < 1e-4);
    assert!(first[2] > 0.0 && first[2] <= 15.0);
}

#[test]
fn sweep_negative_mirrors_the_grid() {
    let out = run(&[
        "sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "0.5",
        "--negative",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let eps: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(eps, ["-1", "-0.5", "0"]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&[
            "sweep", "--graph", "0", "--psi", "3,0,0", "--eps-max", "2", "--eps-step", "1",
            "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b);

    // stdout and --out carry the same bytes.
    let out = run(&["sweep", "--graph", "0", "--psi", "3,0,0", "--eps-max", "2", "--eps-step", "1"]);
    assert_eq!(out.stdout, bytes_a);
}

#[test]
fn graph_files_are_equivalent_to_census_ids() {
    // The triangle with root 2: relabeling the root to vertex 0 reproduces
    // census class 2 exactly, so the sweeps must agree to the byte.
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("triangle.json");
    std::fs::write(&graph_path, r#"{"L":3,"root":2,"edges":[[0,1],[1,2],[2,0]]}"#).unwrap();
    let from_file = run(&[
        "sweep", "--graph", graph_path.to_str().unwrap(), "--psi", "111",
        "--eps-max", "1", "--eps-step", "0.5",
    ]);
    let from_id = run(&[
        "sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "0.5",
    ]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_id.stdout);
}

#[test]
fn config_errors_exit_with_code_two() {
    // Step larger than the grid extent.
    let out = run(&["sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown census ID.
    let out = run(&["sweep", "--graph", "7", "--psi", "111"]);
    assert_eq!(out.status.code(), Some(2));
    // Graph file that does not exist.
    let out = run(&["sweep", "--graph", "/no/such/file.json", "--psi", "111"]);
    assert_eq!(out.status.code(), Some(2));
    // Initial state with no bosons.
    let out = run(&["sweep", "--graph", "2", "--psi", "000"]);
    assert_eq!(out.status.code(), Some(2));
    // Graph and state disagree on the site count. A census ID inherits the
    // site count from --psi, so only a graph file can pin a conflicting one.
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("triangle.json");
    std::fs::write(&graph_path, r#"{"L":3,"root":0,"edges":[[0,1],[1,2],[2,0]]}"#).unwrap();
    let out = run(&["sweep", "--graph", graph_path.to_str().unwrap(), "--psi", "1111"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_emits_one_probability_column_per_level() {
    let out = run(&[
        "trace", "--graph", "2", "--psi", "111", "--eps", "1", "--horizon", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,entropy,rho_0,rho_1,rho_2,rho_3,norm");
    assert_eq!(lines.len(), 102);
    for line in &lines[1..] {
        let fields: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(fields.len(), 7);
        let total: f64 = fields[2..6].iter().sum();
        assert!((total - 1.0).abs() < 1e-9, "probabilities must sum to 1: {line}");
        assert!((fields[6] - 1.0).abs() < 1e-9, "norm must stay 1: {line}");
    }
}

#[test]
fn predict_needs_a_site_count_for_census_ids() {
    let out = run(&["predict", "--graph", "2", "--family", "uniform"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "predict", "--graph", "2", "--family", "uniform", "--sites", "3",
        "--eps-max", "10", "--eps-step", "10",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "eps,ep_exact,ep_surrogate,p_closed,p_matrix");
    assert_eq!(lines.len(), 3);
    let at_ten: Vec<f64> = lines[2].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(at_ten[0], 10.0);
    assert!((at_ten[3] - at_ten[4]).abs() < 1e-9, "closed form must match matrix elements");
    assert!((at_ten[1] - at_ten[2]).abs() < 0.05, "surrogate must track the exact peak");
}

#[test]
fn predict_rejects_unknown_families() {
    let out = run(&["predict", "--graph", "2", "--family", "thermal", "--sites", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn labels_become_comment_lines() {
    let out = run(&[
        "sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "1",
        "--paper-label", "triangle, uniform filling",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("# triangle, uniform filling\neps,ep,t_star\n"));
}

#[test]
fn plot_scripts_require_and_reference_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let script = dir.path().join("sweep.gp");

    // Without --out there is no CSV path for the script to point at.
    let out = run(&[
        "sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "1",
        "--plot-script", script.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&[
        "sweep", "--graph", "2", "--psi", "111", "--eps-max", "1", "--eps-step", "1",
        "--out", csv.to_str().unwrap(),
        "--plot-script", script.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&script).unwrap();
    assert!(text.contains(csv.to_str().unwrap()));
    assert!(Path::new(&csv).exists());
}

#[test]
fn verify_battery_reports_and_succeeds() {
    let out = run(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("all 14 checks passed"));
    assert_eq!(text.matches("[ ok ]").count(), 14);
    assert_eq!(text.matches("[FAIL]").count(), 0);
}
