use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_graphlogic");

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, contents).unwrap();
        p
    }

    fn generated(&self, name: &str, args: &[&str]) -> PathBuf {
        let out = run(&[&["gen"], args].concat());
        assert_eq!(out.status.code(), Some(0));
        self.file(name, &String::from_utf8(out.stdout).unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("GRAPHLOGIC_DEADLINE_SECS").output().unwrap()
}

fn run_with(args: &[&str], path: &Path) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    run(&all)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    k.sort();
    k
}

#[test]
fn recognize_exit_codes_and_witness() {
    let ws = Workspace::new();
    let p4 = ws.generated("p4.gr", &["path", "4"]);
    let c4 = ws.generated("c4.gr", &["cycle", "4"]);

    let out = run_with(&["recognize", "--class", "cograph"], &p4);
    assert_eq!(out.status.code(), Some(1));
    let w = &json(&out)["witness"];
    assert_eq!(w["pattern"], "P4");
    for k in ["kind", "pattern", "vertices", "hitVertices", "hitEdges"] {
        assert!(w.get(k).is_some(), "witness lacks {k}");
    }

    assert_eq!(run_with(&["recognize", "--class", "split"], &p4).status.code(), Some(0));
    assert_eq!(run_with(&["recognize", "--class", "interval"], &c4).status.code(), Some(1));
    assert_eq!(run_with(&["recognize", "--class", "planar"], &c4).status.code(), Some(2));
}

#[test]
fn delete_results() {
    let ws = Workspace::new();
    let p4 = ws.generated("p4.gr", &["path", "4"]);
    let c4 = ws.generated("c4.gr", &["cycle", "4"]);

    let out = run_with(&["delete", "--class", "cograph", "--mode", "node", "--method", "exact"], &p4);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(
        keys(&r),
        ["certified", "class", "method", "mode", "ratioBound", "rounds", "size", "solution"]
    );
    assert_eq!(r["size"], 1);
    assert_eq!(r["solution"], serde_json::json!([0]));

    let out = run_with(&["delete", "--class", "split", "--mode", "edge", "--method", "approx"], &c4);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["certified"], true);
    assert_eq!(r["method"], "approx-packing");

    let out = run_with(&["delete", "--class", "cograph", "--method", "approx"], &p4);
    assert_eq!(json(&out)["ratioBound"], 4);

    let out = run_with(&["delete", "--class", "interval", "--mode", "edge"], &c4);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run_with(&["delete", "--class", "chordal", "--method", "approx"], &c4);
    assert_eq!(out.status.code(), Some(2));
    let out = run_with(&["delete", "--class", "chordal"], &c4);
    assert_eq!(json(&out)["size"], 1);
}

#[test]
fn delete_prefers_exact_when_asked() {
    let ws = Workspace::new();
    let p4 = ws.generated("p4.gr", &["path", "4"]);
    let approx = json(&run_with(&["delete", "--class", "cograph"], &p4));
    assert_eq!(approx["size"], 4);
    let exact = json(&run_with(&["delete", "--class", "cograph", "--prefer-exact"], &p4));
    assert_eq!(exact["size"], 1);
    assert_eq!(exact["method"], "exact");
}

#[test]
fn caps_and_deadlines_exit_4() {
    let ws = Workspace::new();
    let big = ws.generated("big.gr", &["gnp", "20", "0.5", "--seed", "3"]);
    assert_eq!(run_with(&["delete", "--class", "cograph", "--method", "exact"], &big).status.code(), Some(4));
    // auto falls back to the packing solver above the cap
    let out = run_with(&["delete", "--class", "cograph", "--prefer-exact"], &big);
    assert_eq!(json(&out)["method"], "approx-packing");

    let out = Command::new(BIN)
        .args(["delete", "--class", "split", "--method", "exact", "--max-vertices", "40"])
        .arg(ws.generated("huge.gr", &["gnp", "40", "0.5", "--seed", "5"]))
        .env("GRAPHLOGIC_DEADLINE_SECS", "0.05")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    let out = Command::new(BIN)
        .args(["solve", "--variant", "dom"])
        .arg(&big)
        .env("GRAPHLOGIC_DEADLINE_SECS", "soon")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let k = ws.generated("k13.gr", &["complete", "13"]);
    assert_eq!(run_with(&["decompose", "--strategy", "exact-small"], &k).status.code(), Some(4));
}

#[test]
fn solve_variants() {
    let ws = Workspace::new();
    let star5 = ws.generated("star5.gr", &["star", "5"]);
    let k13 = ws.generated("k13.gr", &["star", "3"]);
    let c5 = ws.generated("c5.gr", &["cycle", "5"]);
    let c6 = ws.generated("c6.gr", &["cycle", "6"]);

    let r = json(&run_with(&["solve", "--variant", "dom"], &star5));
    assert_eq!(keys(&r), ["certified", "set", "size", "variant"]);
    assert_eq!(r["size"], 1);

    let out = run_with(&["solve", "--variant", "rainbow", "--k", "2"], &k13);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out), serde_json::json!({"infeasible": true}));

    let r = json(&run_with(&["solve", "--variant", "coloring", "--min-k"], &c5));
    assert_eq!(keys(&r), ["certified", "colors", "k", "variant"]);
    assert_eq!(r["k"], 3);
    assert_eq!(r["variant"], "coloring");

    assert_eq!(json(&run_with(&["solve", "--variant", "rainbow", "--min-k"], &k13))["k"], 3);
    assert_eq!(json(&run_with(&["solve", "--variant", "connected_dom"], &c6))["size"], 4);
    assert_eq!(json(&run_with(&["solve", "--variant", "perfect_dom"], &ws.generated("c4.gr", &["cycle", "4"])))["size"], 2);
    assert_eq!(json(&run_with(&["solve", "--variant", "cycle_dom"], &c6))["size"], 6);
    assert_eq!(run_with(&["solve", "--variant", "cycle_dom"], &star5).status.code(), Some(3));

    assert_eq!(run_with(&["solve", "--variant", "coloring"], &c5).status.code(), Some(2));
    assert_eq!(run_with(&["solve", "--variant", "nope", "--min-k"], &c5).status.code(), Some(2));
    assert_eq!(run_with(&["solve", "--variant", "star", "--method", "dp", "--min-k"], &c5).status.code(), Some(2));
    assert_eq!(run_with(&["solve", "--variant", "dom", "--k", "2", "--min-k"], &c5).status.code(), Some(2));
}

#[test]
fn solve_with_supplied_decomposition() {
    let ws = Workspace::new();
    let td = ws.path("t.td");
    let g = ws.generated("pt.gr", &["partial-2-tree", "60", "--seed", "1", "--td-out", td.to_str().unwrap()]);
    let check = run(&["decompose", "--check", td.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert!(json(&check)["width"].as_u64().unwrap() <= 2);

    let with_td = json(&run(&["solve", "--variant", "dom", "--td", td.to_str().unwrap(), g.to_str().unwrap()]));
    let without = json(&run_with(&["solve", "--variant", "dom", "--strategy", "min-fill"], &g));
    assert_eq!(with_td["size"], without["size"]);

    // a decomposition for another graph is rejected
    let other = ws.generated("c5.gr", &["cycle", "5"]);
    let out = run(&["solve", "--variant", "dom", "--td", td.to_str().unwrap(), other.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let bad = ws.file("bad.td", "s td 1 2 5\nb 1 1 2\n");
    let out = run(&["decompose", "--check", bad.to_str().unwrap(), other.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn decompose_round_trips() {
    let ws = Workspace::new();
    let g = ws.generated("g.gr", &["gnp", "10", "0.4", "--seed", "2"]);
    for strategy in ["min-degree", "min-fill", "exact-small"] {
        let out = run_with(&["decompose", "--strategy", strategy], &g);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("s td "));
        let td = ws.file("d.td", &text);
        assert_eq!(run(&["decompose", "--check", td.to_str().unwrap(), g.to_str().unwrap()]).status.code(), Some(0));
    }
}

#[test]
fn check_formulas() {
    let ws = Workspace::new();
    let p3 = ws.generated("p3.gr", &["path", "3"]);
    let vc = ws.file("vc.fol", "forall x. forall y. E(x,y) -> (S(x) | S(y))");
    let vc = vc.to_str().unwrap();

    assert_eq!(run_with(&["check", "--formula", vc, "--set", "1"], &p3).status.code(), Some(0));
    assert_eq!(run_with(&["check", "--formula", vc, "--set", ""], &p3).status.code(), Some(1));
    let out = run_with(&["check", "--formula", "@min_vc", "--set", "1"], &p3);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out), serde_json::json!({"value": true}));
    assert_eq!(run_with(&["check", "--formula", "@min_vc", "--set", ""], &p3).status.code(), Some(1));

    let bad = ws.file("bad.fol", "forall x. S(z)");
    assert_eq!(run_with(&["check", "--formula", bad.to_str().unwrap(), "--set", "1"], &p3).status.code(), Some(2));
    assert_eq!(run_with(&["check", "--formula", "@nope", "--set", "1"], &p3).status.code(), Some(2));
    assert_eq!(run_with(&["check", "--formula", vc, "--set", "7"], &p3).status.code(), Some(2));

    // edge sets, vertex variables and color families
    let cut = ws.file("cut.fol", "forall x. forall y. S(x,y) -> E(x,y)");
    assert_eq!(run_with(&["check", "--formula", cut.to_str().unwrap(), "--set", "0-1"], &p3).status.code(), Some(0));
    assert_eq!(run_with(&["check", "--formula", cut.to_str().unwrap(), "--set", "0-2"], &p3).status.code(), Some(2));
    let hub = ws.file("hub.fol", "free x. forall y. x = y | E(x,y)");
    assert_eq!(run_with(&["check", "--formula", hub.to_str().unwrap(), "--vertex", "x=1"], &p3).status.code(), Some(0));
    assert_eq!(run_with(&["check", "--formula", hub.to_str().unwrap(), "--vertex", "x=0"], &p3).status.code(), Some(1));
    let proper = ["check", "--formula", "@proper_vertex_coloring", "--colors"];
    assert_eq!(run_with(&[&proper[..], &["0,1,0"]].concat(), &p3).status.code(), Some(0));
    assert_eq!(run_with(&[&proper[..], &["0,0,1"]].concat(), &p3).status.code(), Some(1));
    assert_eq!(run_with(&[&proper[..], &["0,1"]].concat(), &p3).status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "gnp", "8", "0.5", "--seed", "7"]);
    let b = run(&["gen", "gnp", "8", "0.5", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen", "gnp", "8", "0.5", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(String::from_utf8(run(&["gen", "path", "4"]).stdout).unwrap(), "p 4 3\n0 1\n1 2\n2 3\n");
    let dimacs = String::from_utf8(run(&["--format", "dimacs", "gen", "path", "3"]).stdout).unwrap();
    assert!(dimacs.starts_with("p edge 3 2"));
    assert_eq!(run(&["gen", "gnp", "8", "1.5"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "torus", "3"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2() {
    let ws = Workspace::new();
    let loop_ = ws.file("loop.gr", "p 2 1\n0 0\n");
    let out = run_with(&["recognize", "--class", "cograph"], &loop_);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["recognize", "--class", "cograph", "/nonexistent.gr"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn audit_campaign_and_single_graph() {
    let ws = Workspace::new();
    let out = run(&["audit", "--class", "split", "--graphs", "40", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["withinBound"], true);
    assert_eq!(r["ratioBound"], 5);
    assert_eq!(r["audited"].as_u64().unwrap() + r["skipped"].as_u64().unwrap(), 40);
    let again = run(&["audit", "--class", "split", "--graphs", "40", "--seed", "3"]);
    assert_eq!(out.stdout, again.stdout);

    let p4 = ws.generated("p4.gr", &["path", "4"]);
    let r = json(&run_with(&["audit", "--class", "cograph"], &p4));
    assert_eq!(r, serde_json::json!({"approx": 4, "exact": 1, "ratio": 4.0}));
    let r = json(&run(&["audit", "--class", "cograph", "--mode", "edge", "--graphs", "20", "--max-n", "6"]));
    assert_eq!(r["ratioBound"], Value::Null);
}

#[test]
fn text_output() {
    let ws = Workspace::new();
    let p4 = ws.generated("p4.gr", &["path", "4"]);
    let out = run_with(&["--output", "text", "delete", "--class", "cograph", "--method", "exact"], &p4);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("size 1"), "{text}");
}
