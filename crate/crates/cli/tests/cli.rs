use std::path::Path;
use std::process::{Command, Output};

fn lgtw(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgtw"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let o = lgtw(dir, args);
    assert!(
        o.status.success(),
        "{args:?} failed: {}{}",
        stdout(&o),
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

#[test]
fn con_of_k4_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "complete", "4", "-o", "k4.gr"]);
    let out = ok(d, &["exact", "con", "k4.gr"]);
    assert!(out.starts_with("con 5\nwitness k4.con.emb"), "{out}");
    assert_eq!(
        ok(d, &["validate", "k4.con.emb", "--graph", "k4.gr"]),
        "valid congestion 5\n"
    );
}

#[test]
fn bounds_on_square_of_eight_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "cycle-power", "8", "2", "-o", "c.gr"]);
    let out = ok(d, &["bounds", "c.gr", "--exact"]);
    assert!(out.contains("bound min-degree lower tw(L) 7\n"), "{out}");
    assert!(out.contains("exact pw(L) 7\n"), "{out}");
}

#[test]
fn sharp_path_power() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "path-power", "9", "2", "-o", "g.gr"]);
    let out = ok(d, &["sharp", "g.gr", "--family", "path-power"]);
    assert!(out.contains("width 4\n"), "{out}");
    assert!(!lgtw(d, &["sharp", "g.gr", "--family", "cycle-power"]).status.success());
}

#[test]
fn witnesses_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "cycle-power-matched", "8", "2", "-o", "g.gr"]);
    for m in ["tw", "pw", "cw", "con", "pcon"] {
        ok(d, &["exact", m, "g.gr"]);
    }
    ok(d, &["exact", "tw", "g.gr", "--line"]);
    for f in [
        "g.tw.td",
        "g.pw.td",
        "g.cw.ord",
        "g.con.emb",
        "g.pcon.ord",
        "g.tw-line.td",
    ] {
        assert!(ok(d, &["validate", f, "--graph", "g.gr"]).starts_with("valid"), "{f}");
    }
    for k in ["expand", "improved"] {
        ok(d, &["construct", k, "g.gr", "--td", "g.tw.td"]);
        ok(d, &["validate", &format!("g.{k}.td"), "--graph", "g.gr", "--line"]);
    }
    ok(d, &["normalize", "g.tw-line.td", "--graph", "g.gr"]);
    ok(d, &["validate", "g.tw-line.normal.td", "--graph", "g.gr"]);
    ok(d, &["transform", "lg-to-g", "g.tw-line.td", "--graph", "g.gr"]);
    ok(d, &["validate", "g.tw-line.graph.td", "--graph", "g.gr"]);
}

#[test]
fn no_witness_flag() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "complete", "3", "-o", "k3.gr"]);
    assert_eq!(ok(d, &["--no-witness", "exact", "pcon", "k3.gr"]), "pcon 3\n");
    assert!(!d.join("k3.pcon.ord").exists());
}

#[test]
fn deterministic_output() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "complete-bipartite", "3", "3", "-o", "b.gr"]);
    let a = ok(d, &["bounds", "b.gr", "--exact"]);
    assert_eq!(a, ok(d, &["bounds", "b.gr", "--exact"]));
    let emb = std::fs::read(d.join("b.gr")).unwrap();
    ok(d, &["gen", "complete-bipartite", "3", "3", "-o", "b2.gr"]);
    assert_eq!(emb, std::fs::read(d.join("b2.gr")).unwrap());
}

#[test]
fn invalid_decomposition_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["gen", "complete", "3", "-o", "k3.gr"]);
    std::fs::write(d.join("bad.td"), "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n").unwrap();
    let o = lgtw(d, &["validate", "bad.td", "--graph", "k3.gr"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(lgtw(d, &["frobnicate"]).status.code(), Some(2));
    assert_eq!(lgtw(d, &["exact", "con", "missing.gr"]).status.code(), Some(1));
    ok(d, &["gen", "complete", "12", "-o", "k12.gr"]);
    let o = lgtw(d, &["exact", "con", "k12.gr"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit"));
    assert_eq!(
        lgtw(d, &["gen", "grid-cliques", "3", "3", "-o", "x.gr"]).status.code(),
        Some(1)
    );
}

#[test]
fn appendix_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = ok(d, &["verify", "appendix", "a", "--s", "0.1"]);
    assert!(a.starts_with("value 19/50"), "{a}");
    let b = ok(d, &["verify", "appendix", "b", "--s", "1/10", "--parity", "even"]);
    assert!(b.starts_with("value 7/20"), "{b}");
    let c = ok(d, &["verify", "appendix", "c", "--resolution", "8", "--mode", "full"]);
    assert!(c.starts_with("value 1/2"), "{c}");
    assert_eq!(
        lgtw(d, &["verify", "appendix", "a", "--s", "3/4"]).status.code(),
        Some(1)
    );
}

#[test]
fn theorems_exhaustive() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(dir.path(), &["--threads", "2", "verify", "theorems", "--max-n", "5"]);
    assert!(out.starts_with("graphs 130\n"), "{out}");
    assert!(!out.contains("FAIL"), "{out}");
}
