use std::io::Write;
use std::process::{Command, Output};

use coxnet_core::report::NetReport;

fn coxnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxnet"))
        .args(args)
        .output()
        .expect("run coxnet")
}

fn data_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn net_b3_json() {
    let f = data_file("1,2,4\n");
    let o = coxnet(&["net", "--group", "B3", "--data", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let report = NetReport::from_json(text.trim_end()).unwrap();
    assert_eq!(report.group, "B3");
    assert_eq!(report.n, 3);
    assert_eq!(report.intervals.len(), 7);
    let probs: Vec<(i64, i64)> = report.intervals.iter().map(|iv| (iv.num, iv.den)).collect();
    assert_eq!(
        probs,
        vec![(1, 8), (1, 8), (1, 8), (1, 4), (1, 8), (1, 8), (1, 8)]
    );
    assert_eq!(report.to_json(), text.trim_end());
}

#[test]
fn net_a3_uniform() {
    let f = data_file("# four values\n0.5\n-1.25\n3\n2.125\n");
    let o = coxnet(&[
        "net",
        "--group",
        "A3",
        "--data",
        f.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.contains(",1,4,")), "{text}");
}

#[test]
fn net_alpha_and_text() {
    let f = data_file("1, 2, 4");
    let path = f.path().to_str().unwrap();
    let o = coxnet(&[
        "net", "--group", "B3", "--data", path, "--format", "text", "--alpha", "0.25",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("central set U_1..U_5"),
        "{}",
        stdout(&o)
    );
    let o = coxnet(&["net", "--group", "B3", "--data", path, "--alpha", "0.25"]);
    assert!(NetReport::from_json(stdout(&o).trim_end()).is_ok());
    assert!(stderr(&o).contains("central set"));
}

#[test]
fn net_hartigan_and_nongroup() {
    let f = data_file("0.3\n1.1\n-0.4\n");
    let path = f.path().to_str().unwrap();
    let o = coxnet(&["net", "--group", "hartigan", "--data", path]);
    assert_eq!(o.status.code(), Some(0));
    let r = NetReport::from_json(stdout(&o).trim_end()).unwrap();
    assert_eq!(r.group, "hartigan3");
    assert_eq!(r.intervals.len(), 8);
    let o = coxnet(&["net", "--group", "nongroup3", "--data", path]);
    let r = NetReport::from_json(stdout(&o).trim_end()).unwrap();
    assert_eq!(r.gf, vec![1, 1, 2, 2, 1, 1]);
    let o = coxnet(&["net", "--group", "nongroup4", "--data", path]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn data_errors_exit_2() {
    let f = data_file("1\n2\nthree\n");
    let o = coxnet(&["net", "--group", "B3", "--data", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let f = data_file("1,2\n");
    let o = coxnet(&["net", "--group", "B3", "--data", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = coxnet(&["net", "--group", "B3", "--data", "/nonexistent/file.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(coxnet(&[]).status.code(), Some(1));
    assert_eq!(coxnet(&["net", "--group", "B3"]).status.code(), Some(1));
    assert_eq!(
        coxnet(&["mc", "--group", "B3", "--trials", "0"])
            .status
            .code(),
        Some(1)
    );
    let o = coxnet(&["genfun", "--group", "F4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("F4"));
}

#[test]
fn genfun_e8() {
    let o = coxnet(&["genfun", "--group", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("count: 93"));
    assert!(text.contains("degree: 92"));
    assert!(text.contains("sum: 17280"));
    assert!(text.contains("palindromic: yes"));
    assert!(text.contains(" 464 466 466 466 464 "));
    assert!(text.contains("reference table: q^5: computed 4, reference 6"));

    let o = coxnet(&["genfun", "--group", "B2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn verify_commands() {
    let o = coxnet(&["verify", "--group", "B3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = coxnet(&["verify", "--group", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("enumeration skipped"));

    let o = coxnet(&["verify", "--group", "E6", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("51840 elements"));

    let o = coxnet(&["verify", "--group", "B3", "--limit", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("enumeration skipped"));
}

#[test]
fn mc_is_deterministic() {
    let args = ["mc", "--group", "B3", "--trials", "50000", "--seed", "42"];
    let a = coxnet(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = Command::new(env!("CARGO_BIN_EXE_coxnet"))
        .args(args)
        .env("COXNET_THREADS", "1")
        .output()
        .unwrap();
    let body = |o: &Output| stdout(o).lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(body(&a), body(&b));

    let o = coxnet(&[
        "mc",
        "--group",
        "hartigan3",
        "--trials",
        "20000",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.contains("0.125000"))
            .count(),
        8
    );

    let o = coxnet(&[
        "mc",
        "--group",
        "nongroup3",
        "--trials",
        "20000",
        "--theta",
        "-1.5",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn mc_tolerance_failure_exits_3() {
    let o = coxnet(&[
        "mc",
        "--group",
        "B3",
        "--trials",
        "20000",
        "--tolerance",
        "0.001",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn approx_e8() {
    let o = coxnet(&["approx", "--group", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("sigma2 = 601/3"));
    assert!(text.contains("edgeworth: sum 1.0001534"));
    let o = coxnet(&["approx", "--group", "B6"]);
    assert!(stdout(&o).contains("closed-form moments: agree"));
}
