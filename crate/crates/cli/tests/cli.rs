use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graph-limits"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("graph-limits-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn gen(family: &str, size: &str, name: &str) -> (String, String) {
    let g = scratch(&format!("{name}.txt"));
    let c = scratch(&format!("{name}.col"));
    let out = run(&[
        "gen", "--family", family, "--size", size, "--out", g.to_str().unwrap(),
        "--coloring-out", c.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    (g.to_str().unwrap().to_string(), c.to_str().unwrap().to_string())
}

#[test]
fn census_files_compare() {
    let (g1, c1) = gen("cycle", "40", "c40");
    let (g2, c2) = gen("cycle", "80", "c80");
    let a = scratch("a.json");
    let b = scratch("b.json");
    for (g, c, out) in [(&g1, &c1, &a), (&g2, &c2, &b)] {
        let o = run(&["census", g, "--coloring", c, "--r", "3", "--out", out.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert!(text.contains("\"v1|"));
    let o = run(&["tv", a.to_str().unwrap(), b.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tv"], "0");
}

#[test]
fn spectrum_csv_has_full_precision() {
    let (g, _) = gen("cycle", "4", "c4");
    let o = run(&["spectrum", &g, "--format", "csv"]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 4);
    let values: Vec<f64> = lines.iter().map(|l| l.parse().unwrap()).collect();
    for (x, want) in values.iter().zip([0.0, 2.0, 2.0, 4.0]) {
        assert!((x - want).abs() < 1e-9);
    }
    let mantissa = lines[3].split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17);
}

#[test]
fn moments_report_equality() {
    let (g, c) = gen("torus2d", "6", "t6");
    let o = run(&["moments", &g, "--coloring", &c, "--p", "4"]);
    assert!(o.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
    assert!(rows.as_array().unwrap().iter().all(|r| r["equal"] == true));
    assert_eq!(rows[1]["global"], "4");
}

#[test]
fn isoperimetry_commands() {
    let (g, _) = gen("cycle", "12", "c12");
    let o = run(&["cheeger", &g]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ratio"], "1/3");
    let o = run(&["pack", &g, "--eps", "0.7", "--k", "3", "--exact"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m_norm"], "1/3");
    assert_eq!(v["m_count"], 4);
    assert_eq!(v["status"], "complete");
    let o = run(&["sfrac", &g, "--delta", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["s"], "1/12");
}

#[test]
fn exit_codes() {
    let (g, _) = gen("cycle", "30", "c30");
    let o = run(&["goodsets", &g, "--eps", "1", "--k", "10", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["converge", "--family", "cycle", "--sizes", "10,5", "--r", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let bad = scratch("bad.txt");
    std::fs::write(&bad, "2 1 1\n0 0\n").unwrap();
    let o = run(&["spectrum", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["gen", "--family", "random-regular", "--size", "7", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["cheeger", "--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sequence_reports() {
    let o = run(&[
        "thm2", "--family", "torus2d", "--sizes", "6,8", "--delta", "0.5", "--eps", "4/5", "--k", "9",
        "--format", "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("n,s,h_cover,m_norm,m_count,status"));
    assert_eq!(text.lines().count(), 3);
    let o = run(&["ids", "--family", "cycle", "--sizes", "20,40", "--p", "3", "--delta", "0,0.5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["moments_agree"], true);
    assert_eq!(v["provenance"]["tool"], "graph-limits");
    let o = run(&["converge", "--family", "torus2d", "--sizes", "8,16", "--r", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["consecutive"][0], 0.0);
}
