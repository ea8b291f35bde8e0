use std::process::Command;

fn mbar0n(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mbar0n")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn class_rows() {
    let (code, out) = mbar0n(&["class", "6", "--formula", "all"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(rows, ["1,16,16,1"; 5]);
}

#[test]
fn betti_and_exit_codes() {
    assert_eq!(mbar0n(&["betti", "10", "3"]), (0, "63173\n".into()));
    assert_eq!(mbar0n(&["p-poly", "1", "2"]).0, 2);
    assert_eq!(mbar0n(&["frobnicate"]).0, 2);
    assert_eq!(mbar0n(&["--help"]).0, 0);
}

#[test]
fn json_lines_round_trip() {
    let (code, out) = mbar0n(&["--format", "json", "class", "7", "--formula", "all"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), line);
        assert_eq!(v["result"], serde_json::json!(["1", "42", "127", "42", "1"]));
    }
}

#[test]
fn out_file_and_csv() {
    let path = std::env::temp_dir().join(format!("mbar0n-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out) = mbar0n(&["--format", "csv", "--out", p, "chi-series", "6"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(r.headers().unwrap(), vec!["kind", "params", "result", "ms"]);
    let row = r.records().next().unwrap().unwrap();
    assert_eq!(&row[2], "1,1,1,2,7,34,213");
}

#[test]
fn identities_suite_passes() {
    let (code, out) = mbar0n(&["verify", "--suite", "identities", "--threads", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS"));
}
