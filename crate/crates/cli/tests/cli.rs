use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn stripcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stripcolor"))
        .args(args)
        .env_remove("STRIPCOLOR_CAPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const CROSSING: &str = "stripcolor-instance v1
kind strip
n 3
object convex base 0 10 polygon 10,0 0,1
object convex base 5 5 polygon 5,0 5,1
object convex base 10 0 polygon 0,0 10,1
";

const CHAIN: &str = "stripcolor-instance v1
kind strip
n 3
object convex base 0 0 polygon 0,0 0,1
object convex base 3 3 polygon 3,0 3,1
object convex base 6 6 polygon 6,0 6,1
";

#[test]
fn generate_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let o = stripcolor(&["generate", "--kind", "convex", "--n", "25", "--seed", "11", "--omega-cap", "4", "-o", path(p)]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let empty = stripcolor(&["generate", "--kind", "segments", "--n", "0"]);
    assert!(stdout(&empty).contains("n 0"));
}

#[test]
fn crossing_segments_use_three_colors() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("x.txt");
    let report = dir.path().join("r.tsv");
    let svg = dir.path().join("x.svg");
    fs::write(&inst, CROSSING).unwrap();
    let o = stripcolor(&["run", path(&inst), "--algorithm", "stripcolor", "--report", path(&report), "--svg", path(&svg)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("colors=3"), "{out}");
    assert!(out.contains("bound=432"), "{out}");
    let tsv = fs::read_to_string(&report).unwrap();
    assert_eq!(tsv.lines().nth(1).unwrap(), "0\t3\t3\tstripcolor\t3\t432\ttrue");
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));
}

#[test]
fn chain_uses_one_color() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("c.txt");
    fs::write(&inst, CHAIN).unwrap();
    for alg in ["stripcolor", "firstfit"] {
        let o = stripcolor(&["run", path(&inst), "--algorithm", alg]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("colors=1"));
    }
}

#[test]
fn batch_of_100_is_proper() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("b.tsv");
    let o = stripcolor(&[
        "batch", "--n", "20", "--count", "100", "--algorithm", "stripcolor", "--report", path(&report),
    ]);
    assert!(o.status.success());
    let tsv = fs::read_to_string(&report).unwrap();
    let rows: Vec<&str> = tsv.lines().skip(1).collect();
    assert_eq!(rows.len(), 100);
    assert!(rows.iter().all(|r| r.ends_with("\ttrue")));
}

#[test]
fn adversary_forces_k_colors() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("adv.svg");
    for k in ["1", "3", "5"] {
        let o = stripcolor(&["adversary", "-k", k, "--algorithm", "firstfit", "--svg", path(&svg)]);
        assert!(o.status.success());
        let segments = (1usize << k.parse::<u32>().unwrap()) - 1;
        assert!(stdout(&o).contains(&format!("segments={segments} ")));
    }
    assert!(fs::read_to_string(&svg).unwrap().contains("stroke-dasharray"));
}

#[test]
fn curves_for_small_posets() {
    let dir = tempfile::tempdir().unwrap();
    let poset = dir.path().join("p.txt");
    fs::write(&poset, "poset v1\nn 4\nless 0 2\nless 1 3\n").unwrap();
    let o = stripcolor(&["curves", "--poset", path(&poset), "--order", "2,0,3,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verified=true"));
    let o = stripcolor(&["curves", "--fixture", "antichain:4"]);
    assert!(stdout(&o).contains("lines=24"));
    let o = stripcolor(&["curves", "--fixture", "chain:1"]);
    assert!(stdout(&o).contains("lines=1"));
}

#[test]
fn bad_input_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("bad.txt");
    fs::write(&inst, "not an instance\n").unwrap();
    assert!(!stripcolor(&["run", path(&inst)]).status.success());
    assert!(!stripcolor(&["curves", "--fixture", "chain:2", "--order", "0,0"]).status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_stripcolor"))
        .args(["generate", "--n", "3"])
        .env("STRIPCOLOR_CAPS", "bogus=1")
        .output()
        .unwrap();
    assert!(!o.status.success());
}
