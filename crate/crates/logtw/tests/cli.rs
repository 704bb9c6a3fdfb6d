use std::path::Path;
use std::process::{Command, Output};

fn logtw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logtw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn gen_then_detect() {
    let d = tempfile::tempdir().unwrap();
    let g = p(d.path(), "t.gr");
    assert!(logtw(&["gen", "theta", "2", "2", "2", "-o", &g]).status.success());
    let o = logtw(&["detect", &g, "--what", "theta"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("found theta"));
    let o = logtw(&["detect", &g, "--what", "prism"]);
    assert_eq!(stdout(&o).trim(), "none");
}

#[test]
fn decompose_then_verify() {
    let d = tempfile::tempdir().unwrap();
    let (g, td, rep) = (p(d.path(), "w.gr"), p(d.path(), "w.td"), p(d.path(), "w.rep"));
    assert!(logtw(&["gen", "wheels", "14", "0,2,4", "-o", &g]).status.success());
    let o = logtw(&["decompose", &g, "--out-td", &td, "--out-report", &rep]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report = std::fs::read_to_string(&rep).unwrap();
    for key in ["achieved_width=", "bound=", "t=3", "delta=", "hdim=1", "depth_final=", "certified=true"] {
        assert!(report.contains(key), "{key} missing from\n{report}");
    }
    let o = logtw(&["verify", &g, &td]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid width="));
}

#[test]
fn solve_on_c5() {
    let d = tempfile::tempdir().unwrap();
    let g = p(d.path(), "c5.gr");
    assert!(logtw(&["gen", "cycle", "5", "-o", &g]).status.success());
    let o = logtw(&["solve", &g, "--problem", "stable-set"]);
    assert_eq!(stdout(&o).lines().next(), Some("2"));
    let o = logtw(&["solve", &g, "--problem", "coloring"]);
    assert_eq!(stdout(&o).lines().next(), Some("3"));
    let o = logtw(&["solve", &g, "--problem", "q-coloring", "-q", "2"]);
    assert_eq!(stdout(&o).trim(), "no");
    let o = logtw(&["solve", &g, "--problem", "dominating-set"]);
    assert_eq!(stdout(&o).lines().next(), Some("2"));
}

#[test]
fn exit_codes() {
    let d = tempfile::tempdir().unwrap();
    let bad = p(d.path(), "bad.gr");
    std::fs::write(&bad, "p tw 3 2\n1 2\n").unwrap();
    assert_eq!(logtw(&["decompose", &bad]).status.code(), Some(2));

    let g = p(d.path(), "c4.gr");
    assert!(logtw(&["gen", "cycle", "4", "-o", &g]).status.success());
    let td = p(d.path(), "c4.td");
    std::fs::write(&td, "s td 1 3 4\nb 1 1 2 3\n").unwrap();
    assert_eq!(logtw(&["verify", &g, &td]).status.code(), Some(3));

    let w = p(d.path(), "wall.gr");
    assert!(logtw(&["gen", "wall", "6", "-o", &w]).status.success());
    let o = logtw(&["decompose", &w, "--caps", "10"]);
    assert_eq!(o.status.code(), Some(4));
    let o = logtw(&["decompose", &w, "--caps", "10", "--uncertified-ok"]);
    assert_eq!(o.status.code(), Some(0));

    let k = p(d.path(), "k23.gr");
    assert!(logtw(&["gen", "bipartite", "2", "3", "-o", &k]).status.success());
    let o = logtw(&["decompose", &k]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).starts_with("certificate theta"));
    let o = logtw(&["decompose", &k, "--uncertified-ok"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("certified=false"));
}

#[test]
fn bench_table_shape() {
    let o = logtw(&["bench", "--sizes", "16,32", "--seeds", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<_> = out.lines().skip(1).map(|l| logtw::bench::Row::parse(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1].bound - rows[0].bound, 90);
}
