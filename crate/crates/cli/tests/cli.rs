use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_daha-wheel"))
        .args(args)
        .env_remove("WHEEL_CACHE_DIR")
        .output()
        .expect("spawn")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn both_routes_agree() {
    let out = run(&["compute-e", "--n", "2", "--lam", "1,0", "--route", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(v["lambda"], serde_json::json!([1, 0]));
    assert_eq!(v["poly"]["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn pole_is_a_mathematical_failure() {
    let out = run(&[
        "compute-e",
        "--n",
        "3",
        "--k",
        "1",
        "--r",
        "2",
        "--lam",
        "0,1,0",
        "--spec",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["pole_terms"].is_array());
}

#[test]
fn negative_weights_parse() {
    let out = run(&[
        "compute-e",
        "--n",
        "3",
        "--lam",
        "-1,0,2",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("x1^-1"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["enumerate", "--filter", "all", "--n", "2", "--box", "-1"][..],
        &["enumerate", "--filter", "B", "--n", "2", "--box", "1"][..],
        &["compute-e", "--n", "2", "--lam", "1,0,0"][..],
        &["compute-e", "--n", "2", "--lam", "1,x"][..],
        &["verify", "--suite", "nope", "--n", "2"][..],
        &["verify", "--suite", "wheel", "--n", "2"][..],
        &[
            "verify", "--suite", "nk1", "--n", "2", "--k", "2", "--r", "2",
        ][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn enumerate_smallest_box() {
    let out = run(&[
        "enumerate",
        "--filter",
        "B",
        "--n",
        "2",
        "--k",
        "1",
        "--r",
        "2",
        "--box",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 4);
    assert_eq!(v["M_box"], 1);
    assert_eq!(v["filter"], "B");
    assert_eq!(
        v["weights"],
        serde_json::json!([[0, -1], [-1, 1], [1, -1], [1, 0]])
    );
}

#[test]
fn verify_reports_pass() {
    let out = run(&[
        "verify", "--suite", "nk1", "--n", "2", "--k", "1", "--r", "2", "--box", "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["box"], 1);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
    assert_eq!(v["counts"]["B"], 4);
}

#[test]
fn output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path_s = path.to_str().unwrap();
    let args = [
        "verify",
        "--suite",
        "operators",
        "--n",
        "2",
        "--samples",
        "5",
        "--seed",
        "7",
        "--output",
        path_s,
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let first = std::fs::read(&path).unwrap();
    assert!(dir.path().join("report.json.log").exists());
    assert_eq!(run(&args).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), first);
    let direct = run(&args[..args.len() - 2]);
    assert_eq!(direct.stdout, first);
}

#[test]
fn cache_directory_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "compute-e",
        "--n",
        "3",
        "--k",
        "1",
        "--r",
        "3",
        "--lam",
        "2,0,-1",
        "--spec",
    ];
    let plain = run(&args);
    let mut cached = args.to_vec();
    cached.extend(["--cache-dir", dir.path().to_str().unwrap()]);
    let first = run(&cached);
    let second = run(&cached);
    assert_eq!(plain.stdout, first.stdout);
    assert_eq!(first.stdout, second.stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
}
