use std::path::PathBuf;
use std::process::{Command, Output};

use lecture_hall::enumeration::enumerate_extended_lht;
use lecture_hall::SkewShape;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn lhk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lhk")).args(args).output().expect("binary runs")
}

fn lhk_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lhk"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(o));
    serde_json::from_str(&stdout(o)).unwrap()
}

fn fixture(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn temp_json(name: &str, v: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lhk-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path
}

#[test]
fn count_small_shape_all_methods_agree() {
    let v = json_out(&lhk(&["count", "--outer", "2,1", "--n", "2", "--m", "1"]));
    assert_eq!(v["agreement"], true);
    let counts = v["counts"].as_object().unwrap();
    assert_eq!(counts.len(), 5);
    assert!(counts.values().all(|c| c == "2"));
}

#[test]
fn count_single_cell() {
    let v = json_out(&lhk(&["count", "--outer", "1", "--n", "1", "--m", "3"]));
    assert_eq!(v["counts"]["determinant"], "3");
    assert_eq!(v["counts"]["brute_force"], "3");
}

#[test]
fn count_large_skew_shape_runs_brute_force() {
    let v = json_out(&lhk(&["count", "--outer", "6,6,4,3", "--inner", "3,1", "--n", "5", "--m", "1"]));
    assert_eq!(v["counts"]["determinant"], "89640");
    assert_eq!(v["counts"]["brute_force"], "89640");
    assert_eq!(v["agreement"], true);
}

#[test]
fn count_skips_brute_force_over_limit() {
    let v = json_out(&lhk(&["count", "--outer", "6,6,4,3", "--inner", "3,1", "--n", "5", "--m", "2"]));
    assert!(v["counts"].get("brute_force").is_none());
    assert!(v["skipped"].as_array().unwrap().iter().any(|s| s == "brute_force"));
}

#[test]
fn count_text_format_is_aligned() {
    let o = lhk(&["count", "--outer", "2,1", "--n", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "determinant   2"), "{text}");
    assert!(text.lines().any(|l| l == "agreement     yes"), "{text}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["count", "--outer", "1,2", "--n", "2"],
        vec!["count", "--outer", "2,1", "--n", "1"],
        vec!["count", "--outer", "2", "--inner", "3", "--n", "2"],
        vec!["count", "--outer", "x", "--n", "2"],
        vec!["count", "--outer", "2"],
        vec!["count", "--outer", "2", "--n", "1", "--format", "dot"],
        vec!["frobnicate"],
        vec!["verify", "schur-shift", "--m", "0"],
    ] {
        let o = lhk(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let o = lhk(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn bad_thread_cap_is_a_usage_error() {
    let o = lhk_env(&["count", "--outer", "1", "--n", "1"], "LHK_THREADS", "zero");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_main_empty_sweep() {
    let o = lhk(&["verify", "main", "--max-size", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 1);
    assert!(text.ends_with("main: 1 cases, 1 passed, 0 failed\n"), "{text}");
}

#[test]
fn verify_main_sweep_passes() {
    let o = lhk(&["verify", "main", "--max-size", "4", "--max-n", "3", "--trunc-x", "2", "--spot-checks", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_main_with_y_truncation() {
    let o = lhk(&["verify", "main", "--max-size", "3", "--trunc-x", "2", "--trunc-y", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_probability_sweep_passes() {
    let o = lhk(&["verify", "probability", "--max-size", "5", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("probability: 275 cases, 275 passed, 0 failed\n"));
}

#[test]
fn verify_schur_shift_and_jacobi_trudi_pass() {
    for args in [
        vec!["verify", "schur-shift", "--max-size", "4", "--max-n", "3", "--m", "3"],
        vec!["verify", "jacobi-trudi", "--max-size", "4", "--max-n", "3", "--trunc-x", "2"],
    ] {
        let o = lhk(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn verify_json_is_stable_across_thread_counts() {
    let args = ["verify", "main", "--max-size", "3", "--format", "json", "--spot-checks", "1", "--seed", "7"];
    let one = lhk_env(&args, "LHK_THREADS", "1");
    let four = lhk_env(&args, "LHK_THREADS", "4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["cases"].as_array().unwrap().len(), v["passed"].as_u64().unwrap() as usize);
}

#[test]
fn sort_reproduces_golden_and_inverts() {
    let golden = fixture("vsort_golden.json");
    let input = temp_json("golden_in.json", &golden["input"]);
    let o = lhk(&["sort", "vsort", input.to_str().unwrap(), "--n", "7", "--trace"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let sorted: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(sorted, golden["output"]);
    assert!(stderr(&o).lines().all(|l| l.starts_with("round ")));
    assert!(!stderr(&o).is_empty());

    let mid = temp_json("golden_mid.json", &sorted);
    let back = lhk(&["sort", "msort", mid.to_str().unwrap(), "--n", "7"]);
    assert_eq!(back.status.code(), Some(0), "{}", stderr(&back));
    assert_eq!(serde_json::from_slice::<Value>(&back.stdout).unwrap(), golden["input"]);
}

#[test]
fn sort_keeps_sorted_input() {
    let t: Value = serde_json::from_str(
        r#"{"shape":{"outer":[2,1],"inner":[]},"rows":[[{"a":1,"r":1},{"a":1,"r":1}],[{"a":0,"r":1}]]}"#,
    )
    .unwrap();
    let path = temp_json("sorted.json", &t);
    let o = lhk(&["sort", "vsort", path.to_str().unwrap(), "--n", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(serde_json::from_slice::<Value>(&o.stdout).unwrap(), t);
}

#[test]
fn sort_rejects_wrong_class_with_diagnostic() {
    let golden = fixture("vsort_golden.json");
    let input = temp_json("wrong_class.json", &golden["input"]);
    let o = lhk(&["sort", "msort", input.to_str().unwrap(), "--n", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a valid"), "{}", stderr(&o));
}

#[test]
fn sort_round_trips_random_instances_byte_identically() {
    let shape = SkewShape::from_parts(&[3, 2], &[1]).unwrap();
    let all = enumerate_extended_lht(&shape, 3, 2).unwrap();
    assert!(all.len() >= 100);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (i, t) in all.choose_multiple(&mut rng, 100).enumerate() {
        let original = serde_json::to_string(t).unwrap();
        let path = temp_json(&format!("rt{i}.json"), &serde_json::to_value(t).unwrap());
        let v = lhk(&["sort", "vsort", path.to_str().unwrap(), "--n", "3"]);
        assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
        let mid = temp_json(&format!("rt{i}_mid.json"), &serde_json::from_slice(&v.stdout).unwrap());
        let m = lhk(&["sort", "msort", mid.to_str().unwrap(), "--n", "3"]);
        assert_eq!(m.status.code(), Some(0), "{}", stderr(&m));
        assert_eq!(stdout(&m).trim_end(), original);
    }
}

#[test]
fn paths_json_has_expected_horizontal_steps() {
    let f = fixture("lht_floor.json");
    let t = serde_json::json!({"shape": f["shape"], "rows": f["rows"]});
    let path = temp_json("lht.json", &t);
    let v = json_out(&lhk(&["paths", "lht", path.to_str().unwrap(), "--n", "5"]));
    let h: Vec<usize> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["steps"].as_array().unwrap().iter().filter(|s| s["t"] == "H").count())
        .collect();
    assert_eq!(h, vec![3, 4, 5, 3]);
    let dot = lhk(&["paths", "lht", path.to_str().unwrap(), "--n", "5", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph paths {"));
}

#[test]
fn paths_empty_system_and_pairs() {
    let empty = temp_json("empty.json", &serde_json::json!({"shape": {"outer": [], "inner": []}, "rows": []}));
    let o = lhk(&["paths", "ssct", empty.to_str().unwrap(), "--n", "1"]);
    assert_eq!(stdout(&o), "[]\n");

    let f = fixture("split_pair.json");
    let pair = temp_json("pair.json", &serde_json::json!({"l": f["l"], "s": f["s"]}));
    let o = lhk(&["paths", "pair", pair.to_str().unwrap(), "--n", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json_out(&o).as_array().unwrap().len(), 4);
}

#[test]
fn paths_rejects_invalid_tableau() {
    let bad = temp_json("bad.json", &serde_json::json!({"shape": {"outer": [1], "inner": []}, "rows": [[7]]}));
    let o = lhk(&["paths", "ssct", bad.to_str().unwrap(), "--n", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn expand_schur_shift_coefficients() {
    let v = json_out(&lhk(&["expand", "schur-shift", "--outer", "1", "--n", "2", "--m", "3"]));
    let coeffs: Vec<(Value, String)> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["mu"].clone(), c["coeff"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(coeffs, vec![(serde_json::json!([]), "6".to_string()), (serde_json::json!([1]), "1".to_string())]);
}

#[test]
fn expand_polynomials_as_text() {
    let o = lhk(&["expand", "l", "--outer", "1", "--n", "1", "--trunc-x", "2", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "1 * x1 + 1 * x0");
    let o = lhk(&["expand", "s", "--outer", "1", "--n", "2", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "1 * y1 + 1 * y0");
}

#[test]
fn enumerate_reports_total_and_limit() {
    let v = json_out(&lhk(&["enumerate", "lht", "--outer", "2,1", "--n", "2", "--m", "2", "--limit", "3"]));
    assert_eq!(v["total"], 16);
    assert_eq!(v["shown"], 3);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 3);
    let v = json_out(&lhk(&["enumerate", "syt", "--outer", "3,2", "--n", "2"]));
    assert_eq!(v["total"], 5);
}
