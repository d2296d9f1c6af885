use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const BRIDGE: &str = "herg 1\nvertex u : d1\nvertex v : d2\nedge e : d1 d2\n";
const LOOP: &str = "herg 1\nvertex u : d1 d2\nedge e : d1 d2\n";

fn herg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_herg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
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
fn info_prints_key_value_lines() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bridge.herg", BRIDGE);
    let out = herg(&["info", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["f_int = 1", "C_ext = 0", "gamma = 0", "v = 2", "orientable = true", "punctures_hproper = 0"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
    assert_eq!(text.lines().count(), 14);
}

#[test]
fn poly_prints_canonical_form() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "loop.herg", LOOP);
    let out = herg(&["poly", s(&f), "--kind", "RCut"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "y + z*s*t^2\n");
    assert_eq!(stdout(&herg(&["poly", s(&f), "--kind", "RCut", "--subst", "duality"])), "a + a^-1*b\n");
    assert_eq!(stdout(&herg(&["poly", s(&f), "--kind", "M"])), "a^2 + b\n");
    assert_eq!(stdout(&herg(&["poly", s(&f), "--kind", "PCut"])), "a^2 + b\n");
    let b = write(&dir, "bridge.herg", BRIDGE);
    assert_eq!(stdout(&herg(&["poly", s(&b), "--kind", "RSpan", "--expand-x"])), "x\n");
}

#[test]
fn dual_writes_a_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "loop.herg", LOOP);
    let b = write(&dir, "bridge.herg", BRIDGE);
    let out_path = dir.path().join("dual.herg");
    let out = herg(&["dual", s(&f), "-o", s(&out_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(herg(&["iso", s(&out_path), s(&b)]).status.code(), Some(0));
    assert_eq!(herg(&["iso", s(&f), s(&b)]).status.code(), Some(1));
}

#[test]
fn iso_reflection_flag() {
    let dir = TempDir::new().unwrap();
    let g = "herg 1\nvertex u : a1 a2 h1 b1 h2 b2\nedge a : a1 a2\nedge b : b1 b2\nhalf p : h1\nhalf q : h2\n";
    let m = "herg 1\nvertex u : b2 h2 b1 h1 a2 a1\nedge a : a1 a2\nedge b : b1 b2\nhalf p : h1\nhalf q : h2\n";
    let (g, m) = (write(&dir, "g.herg", g), write(&dir, "m.herg", m));
    assert_eq!(herg(&["iso", s(&g), s(&m)]).status.code(), Some(1));
    assert_eq!(herg(&["iso", s(&g), s(&m), "--reflect"]).status.code(), Some(0));
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--vertices", "3", "--edges", "4", "--halves", "2", "--seed", "5", "--twists"];
    let a = herg(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, herg(&args).stdout);
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("g.herg");
    let mut with_out = args.to_vec();
    with_out.extend(["-o", s(&p)]);
    assert_eq!(herg(&with_out).status.code(), Some(0));
    assert_eq!(fs::read(&p).unwrap(), a.stdout);
    assert_eq!(herg(&["gen", "--vertices", "0", "--edges", "1", "--halves", "0", "--seed", "1"]).status.code(), Some(2));
}

#[test]
fn verify_single_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "loop.herg", LOOP);
    let out = herg(&["verify", s(&f), "--suite", "duality"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert!(text.contains("second duality theorem (C_ext = 0)"));
}

#[test]
fn verify_reports_failures_with_exit_one() {
    // A bare vertex: its M does not swap with its own dual's.
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "point.herg", "herg 1\nvertex w\n");
    let out = herg(&["verify", s(&f), "--suite", "duality"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l.starts_with("FAIL  M swap")));
}

#[test]
fn verify_corpus_suites() {
    for suite in ["euler", "recurrence", "double-dual", "one-vertex"] {
        let out = herg(&["verify", "--corpus", "--max-edges", "4", "--seed", "3", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(herg(&[]).status.code(), Some(2));
    assert_eq!(herg(&["poly", "x.herg", "--kind", "Tutte"]).status.code(), Some(2));
    assert_eq!(herg(&["verify", "--suite", "all"]).status.code(), Some(2));
    assert_eq!(herg(&["info", "/nonexistent/file.herg"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.herg", "herg 1\nvertex u : d1\n");
    let out = herg(&["info", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let f = write(&dir, "loop.herg", LOOP);
    assert_eq!(herg(&["poly", s(&f), "--kind", "PSpan", "--subst", "duality"]).status.code(), Some(2));
}
