use std::process::Command;

fn supersol(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_supersol")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_family() {
    let (code, stdout, _) = supersol(&["classify", "--family", "dihedral", "--param", "8"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["report"]["nilpotent"], true);
    assert_eq!(v["report"]["order"], 8);
}

#[test]
fn export_then_classify_and_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a4.txt");
    let p = path.to_str().unwrap();
    assert_eq!(supersol(&["export", "--family", "alternating", "--param", "4", "--out", p]).0, 0);
    let gap = std::fs::read_to_string(format!("{p}.gap")).unwrap();
    assert!(gap.starts_with("[(") && gap.trim_end().ends_with(")]"), "{gap}");

    let (code, stdout, _) = supersol(&["classify", "--spec", p]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"supersoluble\":false") && stdout.contains("\"metanilpotent\":true"));

    let (code, stdout, _) = supersol(&["subgroups", "--spec", p]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 10);
}

#[test]
fn malformed_spec_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "name bad\ndegree 4\ngen (1 2)\ngen (1 2 2)\n").unwrap();
    let (code, _, stderr) = supersol(&["classify", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bad.txt:4:"), "{stderr}");
}

#[test]
fn usage_errors() {
    assert_eq!(supersol(&["nonsense"]).0, 2);
    assert_eq!(supersol(&["classify", "--family", "cyclic", "--param", "4", "--spec", "x"]).0, 2);
    assert_eq!(supersol(&["sweep", "--jobs", "many"]).0, 2);
    assert_eq!(supersol(&["classify", "--family", "symmetric", "--param", "8", "--order-cap", "100"]).0, 2);
    assert_eq!(supersol(&["--help"]).0, 0);
}

#[test]
fn check_pair_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.txt");
    let p = path.to_str().unwrap();
    assert_eq!(supersol(&["export", "--family", "dihedral", "--param", "8", "--out", p]).0, 0);
    let (code, stdout, _) = supersol(&["check-pair", "--spec", p, "--a", "(1 3)", "--b", "(1 2)(3 4)"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"hypotheses_hold\":true"));
    let (code, _, stderr) = supersol(&["check-pair", "--spec", p, "--a", "(1 2)", "--b", "(1 3)"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--a"), "{stderr}");
    let (code, _, stderr) = supersol(&["check-pair", "--spec", p, "--a", "(1 3)", "--b", "(1 9)"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--b generator 1"), "{stderr}");
}

#[test]
fn small_sweep_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let args = ["sweep", "--max-order", "60", "--no-order144", "--no-wreath"];
    let run = |out: &std::path::Path, jobs: &str| {
        let mut v = args.to_vec();
        v.extend(["--jobs", jobs, "--out", out.to_str().unwrap()]);
        supersol(&v).0
    };
    assert_eq!(run(&a, "1"), 0);
    assert_eq!(run(&b, "3"), 0);
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let last = String::from_utf8(a).unwrap().lines().last().unwrap().to_string();
    let totals: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(totals["record"], "totals");
    assert_eq!(totals["violations"], 0);
}

#[test]
fn order_144_example_and_demo() {
    let (code, stdout, _) = supersol(&["paper-example"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"passed\":true"));
    let (code, stdout, _) = supersol(&["demo-products"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6);
}
