use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proxi_cli::exit;

fn proxi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_proxi")).args(args).env_remove("PROXI_SEED").output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, content).unwrap();
    p
}

fn generated(dir: &Path, kind: &str, extra: &[&str]) -> PathBuf {
    let p = dir.join(format!("{kind}.txt"));
    let mut args = vec!["generate", kind, "-o", p.to_str().unwrap()];
    args.extend_from_slice(extra);
    assert_eq!(code(&proxi(&args)), exit::OK);
    p
}

#[test]
fn figure3_needs_one_constraint() {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), "figure3", &[]);
    let o = proxi(&["constraints", "cmst", f.to_str().unwrap(), "--verify"]);
    assert_eq!(code(&o), exit::OK, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "1\n1 1 2\n");
}

#[test]
fn zigzag_needs_all_edges() {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), "zigzag", &["-n", "8"]);
    let o = proxi(&["constraints", "cmst", f.to_str().unwrap(), "--verify", "--format", "json"]);
    assert_eq!(code(&o), exit::OK);
    assert!(stdout(&o).contains("\"count\": 7"));
}

#[test]
fn beta_one_matches_gabriel_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), "random-graph", &["-n", "60", "--seed", "4"]);
    let f = f.to_str().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    assert_eq!(code(&proxi(&["constraints", "beta", "--beta", "1", f, "-o", a.to_str().unwrap()])), 0);
    assert_eq!(code(&proxi(&["constraints", "gabriel", f, "-o", b.to_str().unwrap()])), 0);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(code(&proxi(&["constraints", "beta", "--beta", "1.0", f, "-o", a.to_str().unwrap()])), 0);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn empty_edge_set() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.txt", "3 0\n0 0\n5 1\n2 7\n");
    for fam in ["cmst", "gabriel", "beta"] {
        let o = proxi(&["constraints", fam, f.to_str().unwrap(), "--verify"]);
        assert_eq!(code(&o), exit::OK);
        assert_eq!(stdout(&o), "0\n");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let missing = d.join("nope.txt");
    assert_eq!(code(&proxi(&["constraints", "cmst", missing.to_str().unwrap()])), exit::IO);
    let bad = write(d, "bad.txt", "2 1\n0 0\nx 1\n0 1\n");
    assert_eq!(code(&proxi(&["constraints", "cmst", bad.to_str().unwrap()])), exit::PARSE);
    let collinear = write(d, "col.txt", "3 1\n0 0\n1 1\n2 2\n0 2\n");
    assert_eq!(code(&proxi(&["constraints", "gabriel", collinear.to_str().unwrap()])), exit::GEOMETRY);
    let crossing = write(d, "x.txt", "4 2\n0 0\n10 1\n1 9\n9 8\n0 3\n1 2\n");
    assert_eq!(code(&proxi(&["constraints", "gabriel", crossing.to_str().unwrap()])), exit::GEOMETRY);
    let cycle = write(d, "c.txt", "3 3\n0 0\n10 1\n4 9\n0 1\n1 2\n2 0\n");
    assert_eq!(code(&proxi(&["constraints", "cmst", cycle.to_str().unwrap()])), exit::GEOMETRY);
    assert_eq!(code(&proxi(&["constraints", "beta", "--beta", "3", cycle.to_str().unwrap()])), exit::PARSE);
    assert_eq!(code(&proxi(&["constraints", "gabriel", "--beta", "2", cycle.to_str().unwrap()])), exit::PARSE);
    let big = generated(d, "random-forest", &["-n", "40", "--seed", "2"]);
    assert_eq!(code(&proxi(&["verify", big.to_str().unwrap()])), exit::ORACLE_GUARD);
    assert_eq!(code(&proxi(&["verify", "--skip-oracle", big.to_str().unwrap()])), exit::OK);
}

#[test]
fn verify_reports_pass_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), "figure2", &[]);
    let o = proxi(&["verify", f.to_str().unwrap()]);
    assert_eq!(code(&o), exit::OK);
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| l.starts_with("PASS ")), "{out}");
    assert!(out.contains("graph hierarchy"));
}

#[test]
fn several_inputs_in_parallel() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut inputs = Vec::new();
    for seed in 0..6 {
        let p = d.join(format!("f{seed}.json"));
        let args = ["generate", "random-forest", "-n", "30", "--seed", &seed.to_string(), "--format", "json"];
        let mut args = args.to_vec();
        args.extend(["-o", p.to_str().unwrap()]);
        assert_eq!(code(&proxi(&args)), 0);
        inputs.push(p.to_str().unwrap().to_string());
    }
    let out = d.join("out");
    let mut args = vec!["constraints", "cmst", "--jobs", "3", "--verify", "-o", out.to_str().unwrap()];
    args.extend(inputs.iter().map(String::as_str));
    assert_eq!(code(&proxi(&args)), exit::OK);
    for (seed, input) in inputs.iter().enumerate() {
        let single = proxi(&["constraints", "cmst", input]);
        assert_eq!(fs::read_to_string(out.join(format!("f{seed}.txt"))).unwrap(), stdout(&single));
    }
}

#[test]
fn seed_env_overrides_flag() {
    let run = |seed: Option<&str>, flag: &str| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_proxi"));
        c.args(["generate", "random-forest", "-n", "12", "--seed", flag]).env_remove("PROXI_SEED");
        if let Some(s) = seed {
            c.env("PROXI_SEED", s);
        }
        String::from_utf8(c.output().unwrap().stdout).unwrap()
    };
    assert_eq!(run(Some("9"), "1"), run(None, "9"));
    assert_ne!(run(None, "1"), run(None, "9"));
    assert_eq!(run(None, "5"), run(None, "5"));
}

#[test]
fn cdt_dump_flags_constraints() {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), "figure6", &[]);
    let o = proxi(&["cdt", f.to_str().unwrap()]);
    assert_eq!(code(&o), exit::OK);
    let out = stdout(&o);
    assert!(out.starts_with("4 5\n"));
    assert!(out.lines().any(|l| l == "0 1 1"));
    assert_eq!(out.lines().filter(|l| l.ends_with(" 0") && l.split(' ').count() == 3).count(), 4);
}

#[test]
fn bench_csv() {
    let o = proxi(&["bench", "--sizes", "2,200", "--repeats", "1"]);
    assert_eq!(code(&o), exit::OK);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("family,n,edges,constraints,cdt_ms"));
    assert_eq!(lines.count(), 2);
    let o = proxi(&["bench", "--family", "beta", "--beta", "3/2", "--sizes", "100", "--repeats", "1"]);
    assert!(stdout(&o).contains("beta(3/2),100,"));
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against the checked-in drawing; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(kind: &str, extra: &[&str]) {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), kind, extra);
    let args = ["render", f.to_str().unwrap(), "--family", "cmst", "--labels"];
    let first = proxi(&args);
    assert_eq!(code(&first), exit::OK);
    assert_eq!(first.stdout, proxi(&args).stdout);
    let path = golden(&format!("{kind}.svg"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &first.stdout).unwrap();
    }
    assert_eq!(stdout(&first), fs::read_to_string(&path).unwrap(), "{kind} drawing changed");
}

#[test]
fn golden_figure2() {
    check_golden("figure2", &[]);
}

#[test]
fn golden_figure3() {
    check_golden("figure3", &[]);
}

#[test]
fn golden_zigzag() {
    check_golden("zigzag", &["-n", "8"]);
}

#[test]
fn render_empty_and_large() {
    let dir = tempfile::tempdir().unwrap();
    let e = write(dir.path(), "empty.txt", "0 0\n");
    let o = proxi(&["render", e.to_str().unwrap()]);
    assert_eq!(code(&o), exit::OK);
    let svg = stdout(&o);
    assert_eq!(svg.matches("<line").count(), 2);
    assert!(!svg.contains("<circle"));

    let f = generated(dir.path(), "random-graph", &["-n", "1000", "--seed", "8"]);
    let out = dir.path().join("big.svg");
    let t = std::time::Instant::now();
    let o = proxi(&["render", f.to_str().unwrap(), "--family", "gabriel", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), exit::OK);
    assert!(t.elapsed().as_secs_f64() < 1.0, "render took {:?}", t.elapsed());
    assert_eq!(fs::read_to_string(out).unwrap().matches("<circle").count(), 1000);
}

#[test]
fn svg_alongside_constraints() {
    let dir = tempfile::tempdir().unwrap();
    let f = generated(dir.path(), "figure3", &[]);
    let svg = dir.path().join("f.svg");
    let o = proxi(&["constraints", "cmst", f.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert_eq!(code(&o), exit::OK);
    assert!(fs::read_to_string(svg).unwrap().contains("class=\"constraints\""));
}
