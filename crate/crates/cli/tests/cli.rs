use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn gged(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gged")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn disperse_three_intervals() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"kind":"unit_intervals","items":["0","1/2","1"]}"#);
    let o = gged(&["disperse", "--input", s(&f), "--s", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "total 1"), "{}", stdout(&o));

    let o = gged(&["disperse", "--input", s(&f), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], "1");
    assert_eq!(v["final_centers"], serde_json::json!(["-0.5", "0.5", "1.5"]));
}

#[test]
fn disperse_rejects_small_separation() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"kind":"unit_intervals","items":["0","1/2","1"]}"#);
    assert_eq!(code(&gged(&["disperse", "--input", s(&f), "--s", "1/2"])), 3);
}

#[test]
fn disperse_empty() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "e.json", r#"{"kind":"unit_intervals","items":[]}"#);
    let o = gged(&["disperse", "--input", s(&f)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "total 0"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = [
        r#"{"kind":"unit_intervals","items":[0.5]}"#,
        r#"{"kind":"unit_intervals","items":[],"typo":1}"#,
        "not json",
    ];
    for (i, text) in bad.iter().enumerate() {
        let f = write(&dir, &format!("b{i}.json"), text);
        assert_eq!(code(&gged(&["disperse", "--input", s(&f)])), 2, "{text}");
    }
    assert_eq!(code(&gged(&["disperse", "--input", "/nonexistent/x.json"])), 2);
    assert_eq!(code(&gged(&["no-such-command"])), 2);
}

#[test]
fn oracle_passes() {
    let o = gged(&["oracle", "--max-n", "8", "--trials", "500", "--seed", "42"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("# prng ChaCha8Rng"));
    assert!(out.contains("mismatches 0"));
}

#[test]
fn oracle_is_deterministic() {
    let a = gged(&["oracle", "--max-n", "6", "--trials", "50", "--seed", "7"]);
    let b = gged(&["oracle", "--max-n", "6", "--trials", "50", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cell_gadget_has_nine_disks() {
    let dir = TempDir::new().unwrap();
    let svg = dir.path().join("cell.svg");
    let o = gged(&["gen-gadget", "--kind", "cell", "--svg", s(&svg)]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["items"].as_array().unwrap().len(), 9);
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
}

#[test]
fn gadgets_are_edgeless_as_built() {
    let dir = TempDir::new().unwrap();
    for kind in ["cell", "clause", "variable"] {
        let o = gged(&["gen-gadget", "--kind", kind, "--metric", "l1"]);
        assert_eq!(code(&o), 0);
        let f = write(&dir, &format!("{kind}.json"), &stdout(&o));
        let c = gged(&["check-graph", "--input", s(&f), "--property", "edgeless"]);
        // Transition disks concentric with their heavy disk intersect it.
        assert_eq!(code(&c), if kind == "cell" { 0 } else { 1 }, "{kind}");
    }
}

#[test]
fn component_chain_resolves_clause() {
    let dir = TempDir::new().unwrap();
    let o = gged(&["gen-gadget", "--kind", "component", "--assignment", "tft"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let f = write(&dir, "c.json", &stdout(&o));
    assert_eq!(code(&gged(&["check-graph", "--input", s(&f), "--property", "edgeless"])), 0);
    assert_eq!(code(&gged(&["gen-gadget", "--kind", "component", "--assignment", "ftf"])), 1);
}

#[test]
fn three_partition_round_trip() {
    let dir = TempDir::new().unwrap();
    let o = gged(&["gen-3partition", "--m", "2", "--b", "20", "--seed", "3", "--solved"]);
    assert_eq!(code(&o), 0);
    let f = write(&dir, "w.json", &stdout(&o));
    assert_eq!(code(&gged(&["check-graph", "--input", s(&f), "--property", "edgeless"])), 0);

    let o = gged(&["gen-3partition", "--m", "2", "--b", "20", "--seed", "3"]);
    let f = write(&dir, "w0.json", &stdout(&o));
    assert_eq!(code(&gged(&["check-graph", "--input", s(&f), "--property", "edgeless"])), 1);

    let o = gged(&["gen-3partition", "--m", "2", "--b", "12", "--sizes", "4,4,4,4,4,4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&gged(&["gen-3partition", "--m", "2", "--b", "12", "--sizes", "4,4,4,4,4,5"])), 3);
}

#[test]
fn solve_and_check() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.json", r#"{"kind":"unit_intervals","items":["0","0","0","1/3","2/3"]}"#);
    assert_eq!(code(&gged(&["check-graph", "--input", s(&f), "--property", "kclique-free", "--k", "3"])), 1);
    for (prop, k) in [("edgeless", None), ("acyclic", None), ("kclique-free", Some("3"))] {
        let mut args = vec!["solve", "--input", s(&f), "--property", prop, "--json"];
        if let Some(k) = k {
            args.extend(["--k", k]);
        }
        let o = gged(&args);
        assert_eq!(code(&o), 0, "{prop}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let centers: Vec<String> = v["final_intervals"]["items"]
            .as_array()
            .unwrap()
            .iter()
            .map(|it| format!("\"{}\"", it["center"].as_str().unwrap()))
            .collect();
        let g = write(&dir, "out.json", &format!(r#"{{"kind":"unit_intervals","items":[{}]}}"#, centers.join(",")));
        let mut check = vec!["check-graph", "--input", s(&g), "--property", prop];
        if let Some(k) = k {
            check.extend(["--k", k]);
        }
        assert_eq!(code(&gged(&check)), 0, "{prop}");
    }
    assert_eq!(code(&gged(&["solve", "--input", s(&f), "--property", "kclique-free", "--k", "1"])), 3);
    assert_eq!(code(&gged(&["solve", "--input", s(&f), "--property", "kclique-free"])), 2);
}

#[test]
fn bench_reports_ratios() {
    let o = gged(&["bench", "--sizes", "1e3,2e3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("# prng"));
    assert_eq!(out.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count(), 2);
    assert_eq!(code(&gged(&["bench", "--sizes", "abc"])), 2);
}
