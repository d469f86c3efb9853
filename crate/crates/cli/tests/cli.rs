use std::process::{Command, Output};

fn pmha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmha")).args(args).output().expect("binary runs")
}

#[test]
fn bundled_pass_and_fail_exit_codes() {
    assert_eq!(pmha(&["run", "scenario:coaction_trivial"]).status.code(), Some(0));
    let fail = pmha(&["run", "scenario:mutation_antipode", "--format", "human"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fail.stdout).contains("witness"));
    assert_eq!(pmha(&["run", "scenario:inconclusive_quasi_unit"]).status.code(), Some(2));
}

#[test]
fn report_written_to_out_path_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = pmha(&["run", "scenario:mutation_antipode", "--seed", "5", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1));
        assert!(out.stdout.is_empty());
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 5);
    assert_eq!(v["outcome"], "fail");
}

#[test]
fn seed_changes_sampled_reports_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.toml");
    std::fs::write(
        &path,
        "schema_version = 1\nname = \"conv\"\n\n[[check]]\nkind = \"convolution\"\ninstance = \"A_G:cyclic:2\"\ntarget = \"kG:cyclic:2\"\nsamples = 3\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let one = pmha(&["run", p, "--seed", "1"]);
    assert_eq!(one.stdout, pmha(&["run", p, "--seed", "1"]).stdout);
    assert_ne!(one.stdout, pmha(&["run", p, "--seed", "2"]).stdout);
}

#[test]
fn errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "schema_version = 1\nname = \"x\"\n[[check]]\nkind = \"group\"\ngroup = \"dihedral:4\"\n").unwrap();
    let out = pmha(&["run", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dihedral"));
    assert_eq!(pmha(&["run", "/nonexistent/file.toml"]).status.code(), Some(3));
    assert_eq!(pmha(&["run", "scenario:nope"]).status.code(), Some(3));
    assert_eq!(pmha(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(pmha(&["explain", "nope"]).status.code(), Some(3));
    assert_eq!(pmha(&["--help"]).status.code(), Some(0));
}

#[test]
fn list_and_explain() {
    let out = pmha(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.contains(&"A_G:symmetric:3"));
    assert!(lines.contains(&"scenario:coaction_trivial"));
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    let e = pmha(&["explain", "coglobalization"]);
    assert_eq!(e.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&e.stdout).starts_with("coglobalization:"));
}
