use std::process::{Command, Output};

use serde_json::{json, Value};

fn qloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qloop"))
        .args(args)
        .env_remove("QLOOP_ORDER")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn q_pow_json(k: i64) -> Value {
    if k >= 0 {
        json!({"num": [[k, "1"]], "den": [[0, "1"]]})
    } else {
        json!({"num": [[0, "1"]], "den": [[-k, "1"]]})
    }
}

#[test]
fn lweight_rank_one_vacuum() {
    let out = qloop(&["lweight", "--l", "1", "--a", "1", "--m", "0", "--order", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["lambda"], json!([-2]));
    assert_eq!(v["discrepancies"], json!([]));
    // q^{-2} / (1 - q^{-1} u)
    let minus_q_inv = json!({"num": [[0, "-1"]], "den": [[1, "1"]]});
    assert_eq!(
        v["psi"][0],
        json!({"num": [[0, q_pow_json(-2)]], "den": [[0, q_pow_json(0)], [1, minus_q_inv]]})
    );
    assert_eq!(
        v["meta"],
        json!({"l": 1, "a": 1, "bar": false, "order": 6, "m": [0], "zs": q_pow_json(0)})
    );
}

#[test]
fn lweight_with_spectral_value() {
    let out = qloop(&["lweight", "--l", "2", "--a", "3", "--zs", "q^2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    // psi_2 = 1 - q * zs * u
    assert_eq!(
        v["psi"][1],
        json!({"num": [[0, q_pow_json(0)], [1, {"num": [[3, "-1"]], "den": [[0, "1"]]}]], "den": [[0, q_pow_json(0)]]})
    );
    assert_eq!(v["meta"]["zs"], q_pow_json(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["lweight", "--l", "0"][..],
        &["lweight", "--l", "2", "--a", "4"],
        &["lweight", "--l", "2", "--m", "1"],
        &["lweight", "--l", "2", "--zs", "0"],
        &["lweight", "--l", "2", "--zs", "q^x"],
        &["lweight", "--a", "1"],
        &["verify", "--l", "1", "--order", "1"],
        &["factor", "--l", "2", "--kind", "pref-minus"],
        &["no-such-command"],
    ] {
        let out = qloop(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_is_clean_and_deterministic() {
    let args = ["verify", "--l", "2", "--order", "6", "--mmax", "2", "--json"];
    let a = qloop(&args);
    let b = qloop(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert_eq!(v["discrepancies"], json!([]));
    assert_eq!(v["checks"], json!(3 * 2 * 9 + 3 * 9 * 2 + 3 * 9 * 2));
}

#[test]
fn verify_reflected_family() {
    let out = qloop(&["verify", "--l", "2", "--bar", "--mmax", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 discrepancies"), "{text}");
}

#[test]
fn order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qloop"))
        .args(["verify", "--l", "1", "--mmax", "1", "--json"])
        .env("QLOOP_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["meta"]["order"], json!(5));
    let out = Command::new(env!("CARGO_BIN_EXE_qloop"))
        .args(["lweight", "--l", "1"])
        .env("QLOOP_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path_s = path.to_str().unwrap();
    let out = qloop(&["lweight", "--l", "2", "--a", "2", "--m", "1,2", "--json", "--output", path_s]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
    let v: Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(v["meta"]["m"], json!([1, 2]));
}

#[test]
fn relation_checks_pass() {
    for args in [
        &["serre", "--l", "2", "--a", "2", "--mmax", "2"][..],
        &["serre", "--l", "3", "--a", "4", "--bar", "--i", "0", "--mmax", "1"],
        &["drinfeld", "--l", "2", "--a", "1", "--order", "3", "--mmax", "1"],
        &["factor", "--l", "2", "--kind", "osc-to-pref", "--a", "2", "--zs", "q^-1"],
        &["factor", "--l", "3", "--kind", "pref-plus", "--i", "2", "--zs", "q"],
        &["factor", "--l", "2", "--kind", "full-tensor", "--zs", "q,q^2,q^3"],
    ] {
        let out = qloop(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn dump_op_prints_generator_images() {
    let out = qloop(&["dump-op", "--l", "2", "--a", "2", "--i", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["images"][0]["e"], json!("(1) bdag_1 q^(N_2)"));
    assert_eq!(v["images"][0]["qh"], json!([2, 1]));
}
