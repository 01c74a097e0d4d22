use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use torskit::cli::run;
use torskit::formats::{read_lattice_text, LatticeJson};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.alg"))
        .to_string_lossy()
        .into_owned()
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn torskit(args: &[&str]) -> Out {
    torskit_with_budget(args, None)
}

fn torskit_with_budget(args: &[&str], budget: Option<&str>) -> Out {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("torskit").chain(args.iter().copied());
    let code = run(argv, budget, &mut out, &mut err);
    Out { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn json(o: &Out) -> Value {
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn ind_counts() {
    assert_eq!(json(&torskit(&["ind", &fixture("a2")]))["entries"].as_array().unwrap().len(), 3);
    let a4rel = json(&torskit(&["ind", &fixture("app-a4rel")]));
    assert_eq!(a4rel["entries"].as_array().unwrap().len(), 9);
    assert_eq!(a4rel["hom"].as_array().unwrap().len(), 9);
}

#[test]
fn malformed_file_reports_position() {
    let dir = std::env::temp_dir().join(format!("torskit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "vertices 1 2\narrow a 1 3\n").unwrap();
    let o = torskit(&["ind", bad.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("bad.alg:2:11:"), "{}", o.stderr);
    let o = torskit(&["ind", dir.join("missing.alg").to_str().unwrap()]);
    assert_eq!(o.code, 2);
}

#[test]
fn tors_dot_and_counts() {
    let o = torskit(&["tors", &fixture("a2"), "--format", "dot"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 5);
    assert_eq!(o.stdout.lines().filter(|l| l.contains("->") && l.contains("[label=")).count(), 5);
    for (name, n) in [("a3", 14), ("a3-rev", 14), ("a4", 42), ("d4", 50)] {
        assert_eq!(json(&torskit(&["tors", &fixture(name)]))["elements"].as_array().unwrap().len(), n, "{name}");
    }
}

#[test]
fn kappa_of_s2() {
    let v = json(&torskit(&["kappa", &fixture("a2"), "--brick", "S2"]));
    assert_eq!(v["kappa"], "add(S1,P1)");
    let v = json(&torskit(&["kappa", &fixture("a2"), "--element", "add(S1)"]));
    assert_eq!(v["kappa"], "add(S2)");
    let o = torskit(&["kappa", &fixture("a2"), "--element", "mod"]);
    assert_eq!(o.code, 2, "mod is not join-irreducible");
    assert_eq!(json(&torskit(&["kappa", &fixture("a3")])).as_array().unwrap().len(), 6);
}

#[test]
fn kappa_bar_of_top_is_bottom() {
    let v = json(&torskit(&["kappa-bar", &fixture("a2"), "--element", "mod"]));
    assert_eq!(v["kappa_bar"], "0");
}

#[test]
fn orbits_on_a2() {
    let v = json(&torskit(&["orbits", &fixture("a2")]));
    let avgs: Vec<&str> = v.as_array().unwrap().iter().map(|o| o["average"].as_str().unwrap()).collect();
    assert_eq!(avgs, ["1", "1"]);
    let v = json(&torskit(&["orbits", &fixture("a3")]));
    assert!(v.as_array().unwrap().iter().all(|o| o["average"] == "3/2"));
}

#[test]
fn wide_and_epsilon() {
    let v = json(&torskit(&["wide", &fixture("a2")]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["wide"] == true));
    let v = json(&torskit(&["epsilon", &fixture("a2"), "--element", "add(S1)"]));
    assert_eq!(v["alpha"], "add(S1)");
    assert_eq!(v["epsilon"], "add(S2)");
    // ε needs a hereditary algebra
    assert_eq!(torskit(&["epsilon", &fixture("app-a4rel")]).code, 4);
}

#[test]
fn verify_exit_codes() {
    let o = torskit(&["verify", &fixture("a3"), "--theorems", "A,D,E"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["format"], "report v1");
    assert_eq!(v["theorems"].as_array().unwrap().len(), 3);
    assert_eq!(torskit(&["verify", &fixture("a2"), "--alpha-depth", "2"]).code, 0);
    assert_eq!(torskit(&["verify", &fixture("a2"), "--theorems", "Z"]).code, 2);
    let o = torskit(&["verify", &fixture("app-a4rel"), "--format", "text"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.contains("skipped"));
}

#[test]
fn budget_and_usage_errors() {
    assert_eq!(torskit_with_budget(&["tors", &fixture("d4")], Some("1")).code, 3);
    assert_eq!(torskit_with_budget(&["tors", &fixture("a2")], Some("lots")).code, 2);
    assert_eq!(torskit(&["tors", &fixture("a2"), "--dim-cap", "1,1,1"]).code, 2);
    assert_eq!(torskit(&["tors", &fixture("a2"), "--field", "4"]).code, 2);
    assert_eq!(torskit(&["ind", &fixture("a2"), "--format", "dot"]).code, 2);
    assert_eq!(torskit(&["frobnicate"]).code, 2);
    assert_eq!(torskit(&["--help"]).code, 0);
}

#[test]
fn field_override_keeps_counts() {
    let v = json(&torskit(&["tors", &fixture("a3"), "--field", "3"]));
    assert_eq!(v["elements"].as_array().unwrap().len(), 14);
    let v = json(&torskit(&["tors", &fixture("a2"), "--dim-cap", "1,1"]));
    assert_eq!(v["elements"].as_array().unwrap().len(), 5);
}

#[test]
fn output_is_deterministic() {
    for args in [["tors", "d4"], ["ind", "app-a4rel"], ["verify", "a4"]] {
        let a = torskit(&[args[0], &fixture(args[1])]).stdout;
        let b = torskit(&[args[0], &fixture(args[1])]).stdout;
        assert_eq!(a, b);
    }
}

#[test]
fn tors_json_round_trips_through_lattice_formats() {
    for name in ["a2", "a3", "d4", "app-a4rel"] {
        let parsed: LatticeJson = serde_json::from_str(&torskit(&["tors", &fixture(name)]).stdout).unwrap();
        let (lattice, labels) = parsed.to_lattice().unwrap();
        assert_eq!(labels.len(), parsed.covers.len());
        let text = torskit(&["tors", &fixture(name), "--format", "lattice"]);
        let back = read_lattice_text(&text.stdout).unwrap();
        assert_eq!(back.lattice.cover_edges(), lattice.cover_edges());
        let kb = lattice.kappa_bar_table().unwrap();
        assert_eq!(back.lattice.kappa_bar_table().unwrap(), kb);
        let cli: Vec<String> = serde_json::from_str::<Value>(&torskit(&["kappa-bar", &fixture(name)]).stdout)
            .unwrap()
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["kappa_bar"].as_str().unwrap().to_string())
            .collect();
        let from_json: Vec<String> = kb.iter().map(|&k| parsed.elements[k].name.clone()).collect();
        assert_eq!(cli, from_json, "{name}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("torskit-out-{}.dot", std::process::id()));
    let o = torskit(&["tors", &fixture("a2"), "--format", "dot", "--out", path.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn binary_reads_budget_from_environment() {
    let bin = env!("CARGO_BIN_EXE_torskit");
    let ok = Command::new(bin).args(["ind", &fixture("a2")]).env_remove("TORSKIT_BUDGET").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let capped = Command::new(bin).args(["tors", &fixture("d4")]).env("TORSKIT_BUDGET", "1").output().unwrap();
    assert_eq!(capped.status.code(), Some(3));
    assert!(!capped.stderr.is_empty());
}
