use std::fs;
use std::process::Command;

use bentpoly::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bentpoly").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field<'a>(line: &'a str, key: &str) -> &'a str {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(key).and_then(|v| v.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in {line:?}"))
}

#[test]
fn enumerate_new_family() {
    let (code, out, err) = call(&["enumerate", "--family", "new", "--n", "8", "--a", "first"]);
    assert_eq!(code, 0, "{err}");
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert_eq!(field(r, "verified"), "true");
        assert_eq!(field(r, "rank"), "8");
        assert_eq!(field(r, "degree"), "2");
    }
    assert!(err.contains("4 bent, 0 criterion mismatches"));
}

#[test]
fn enumerate_parallel_sorted_matches_sequential() {
    let base = ["enumerate", "--family", "li", "--n", "8", "--t-max", "3"];
    let (_, seq, _) = call(&base);
    let mut args = vec!["--jobs", "2", "--sorted"];
    args.extend(base);
    let (code, par, _) = call(&args);
    assert_eq!(code, 0);
    assert_eq!(seq, par);
    assert_eq!(seq.lines().count(), 21);
}

#[test]
fn verify_reports_non_bent_li_instance() {
    let (code, out, _) = call(&["verify", "--family", "li", "--n", "6", "--k", "2", "--t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "predicted"), "false");
    assert_eq!(field(&out, "verified"), "false");
}

#[test]
fn csv_and_json_rows() {
    let (code, out, _) = call(&["--format", "csv", "verify", "--family", "ma", "--n", "4", "--c", "0"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,n,params,predicted,verified,rank,degree,digest"));
    assert!(lines.next().unwrap().starts_with("ma,4,c=0,true,true,4,2,"));

    let (code, out, _) = call(&["--format", "json", "verify", "--family", "ma", "--n", "4", "--c", "0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["digest"].as_str().unwrap().len(), 16);
}

#[test]
fn perm_check_on_p() {
    for a in ["2", "3", "4"] {
        let (code, out, _) = call(&["perm-check", "--n", "4", "--P", "--a", a]);
        assert_eq!(code, 0);
        for key in ["gcrd", "dickson", "bruteforce", "agree"] {
            assert_eq!(field(&out, key), "true", "a={a}");
        }
    }
    // 0x8 = x^3 is a cube in GF(16)
    let (code, _, err) = call(&["perm-check", "--n", "4", "--P", "--a", "8"]);
    assert_eq!(code, 1);
    assert!(err.contains("cube"));
}

#[test]
fn perm_check_from_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l.json");
    // x^2 is linear and bijective, x^2 + x is not
    fs::write(&path, r#"{"n":4,"coeffs":["0","1"]}"#).unwrap();
    let (code, out, _) = call(&["perm-check", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "bruteforce"), "true");
    fs::write(&path, r#"{"n":4,"coeffs":["1","1"]}"#).unwrap();
    let (_, out, _) = call(&["perm-check", "--json", path.to_str().unwrap()]);
    assert_eq!(field(&out, "gcrd"), "false");
    assert_eq!(field(&out, "agree"), "true");
}

#[test]
fn gcrd_of_binary_polys() {
    let (code, out, _) = call(&["--format", "json", "gcrd", "--n", "4", "x^4 + 1", "x^2 + 1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "0", "1"]));
}

#[test]
fn truth_table_round_trip_through_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let tt = dir.path().join("f.tt");
    let csv = dir.path().join("w.csv");
    let (code, _, err) = call(&[
        "construct", "--family", "new", "--n", "6", "--subset", "1", "--tt-out", tt.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(fs::read_to_string(&tt).unwrap().starts_with("n=6\n"));
    let (code, _, _) = call(&["spectrum", "--tt", tt.to_str().unwrap(), "--out", csv.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a_hex,value"));
    let values: Vec<i64> = lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(values.len(), 64);
    assert!(values.iter().all(|w| w.abs() == 8));
}

#[test]
fn moduli_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("moduli.txt");
    let args = ["verify", "--family", "new", "--n", "4"];
    let (_, default, _) = call(&args);

    // x^4 + x^3 + 1 instead of x^4 + x + 1
    fs::write(&path, "# alternative\n4,19\n").unwrap();
    let mut with_flag = vec!["--moduli", path.to_str().unwrap()];
    with_flag.extend(args);
    let (code, other, _) = call(&with_flag);
    assert_eq!(code, 0);
    assert_eq!(field(&other, "verified"), "true");
    assert_ne!(field(&default, "digest"), field(&other, "digest"));

    // reducible
    fs::write(&path, "4,11\n").unwrap();
    let (code, _, err) = call(&with_flag);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn moduli_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("moduli.txt");
    fs::write(&path, "4,11\n").unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_bentpoly"))
        .args(["verify", "--family", "ma", "--n", "4", "--c", "0"])
        .env("BENTPOLY_MODULI", &path)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    let status = Command::new(env!("CARGO_BIN_EXE_bentpoly"))
        .args(["verify", "--family", "ma", "--n", "4", "--c", "0"])
        .env_remove("BENTPOLY_MODULI")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(call(&["bogus"]).0, 1);
    assert_eq!(call(&["verify", "--family", "li", "--n", "6"]).0, 1);
    assert_eq!(call(&["selftest", "--only", "99"]).0, 1);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}

#[test]
fn selftest_single_check() {
    let (code, out, _) = call(&["--format", "json", "selftest", "--only", "9"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["id"], "9");
    assert_eq!(v["status"], "pass");
}

#[test]
fn criterion_mismatch_exits_two() {
    let (code, _, err) = call(&["enumerate", "--family", "hu", "--n", "12", "--strict"]);
    assert_eq!(code, 2);
    assert!(err.contains("7 criterion mismatches"));
    assert_eq!(call(&["enumerate", "--family", "hu", "--n", "12"]).0, 0);
}
