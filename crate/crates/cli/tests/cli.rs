use std::io::Write;
use std::process::{Command, Output};

use skewverify::fixtures::find;

fn skewverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewverify"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn spec_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn failing(report: &serde_json::Value) -> Vec<String> {
    report["laws"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|l| l["status"] != "pass")
        .map(|l| l["id"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn fixtures_list_names_the_gallery() {
    let out = skewverify(&["fixtures", "list"]);
    assert_eq!(code(&out), 0);
    let names: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(names, ["trivial", "z2_sign", "z4_f5", "s3_flip", "sweedler_lambda1"]);
}

#[test]
fn braid_eq_exit_codes() {
    assert_eq!(code(&skewverify(&["braid", "eq", "3: 1 2 1", "3: 2 1 2"])), 0);
    assert_eq!(code(&skewverify(&["braid", "eq", "3: 1 2 2", "3: 1 2 1"])), 1);
    assert_eq!(code(&skewverify(&["braid", "eq", "3: 1 -1", "3:"])), 0);
    assert_eq!(code(&skewverify(&["braid", "eq", "3: 1 x", "3: 1"])), 2);
    assert_eq!(code(&skewverify(&["braid", "eq", "3: 1", "4: 1"])), 2);
}

#[test]
fn skew_suite_on_sign_fixture_passes_at_four_probes() {
    let out = skewverify(&[
        "check",
        "--fixture",
        "z2_sign",
        "--suite",
        "skew",
        "--probe-dims",
        "1,1,1,1",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("result: pass, exit 0"));
}

#[test]
fn s3_flip_braiding_names_only_sstar() {
    let out = skewverify(&[
        "check",
        "--fixture",
        "s3_flip",
        "--suite",
        "braiding",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let rep = json(&out);
    assert_eq!(failing(&rep), ["Sstar"]);
    assert_eq!(rep["suite"], "braiding");
    let sstar = rep["laws"]
        .as_array()
        .unwrap()
        .iter()
        .find(|l| l["id"] == "Sstar")
        .unwrap();
    assert!(sstar["witness"]["input"].is_string());
    assert!(sstar["lhs"].is_string() && sstar["rhs"].is_string());
}

#[test]
fn spec_file_matches_fixture_run() {
    let f = spec_file(find("z2_sign").unwrap().json);
    let path = f.path().to_str().unwrap();
    let a = skewverify(&[
        "check",
        "--spec",
        path,
        "--suite",
        "cobraiding",
        "--format",
        "json",
        "--no-timing",
    ]);
    let b = skewverify(&[
        "check",
        "--fixture",
        "z2_sign",
        "--suite",
        "cobraiding",
        "--format",
        "json",
        "--no-timing",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_is_deterministic_and_independent_of_jobs() {
    let args = [
        "check",
        "--fixture",
        "z2_sign",
        "--format",
        "json",
        "--no-timing",
        "--seed",
        "7",
    ];
    let a = skewverify(&args);
    let b = skewverify(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
    assert_eq!(json(&a)["elapsed_ms"], 0);
}

#[test]
fn truncated_spec_is_a_located_parse_error() {
    let f = spec_file("{\n  \"field\": {\"kind\": \"rational\"},\n  \"dim\": 2,\n");
    let out = skewverify(&["check", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn bad_shapes_and_scalars_are_input_errors() {
    let spec: serde_json::Value = serde_json::from_str(find("z2_sign").unwrap().json).unwrap();
    let mut short = spec.clone();
    short["mu"].as_array_mut().unwrap().pop();
    let mut float = spec.clone();
    float["r"][3] = serde_json::json!(-1.0);
    let mut unknown = spec;
    unknown["colour"] = serde_json::json!("red");
    for (bad, needle) in [(short, "mu"), (float, "floating-point"), (unknown, "colour")] {
        let f = spec_file(&bad.to_string());
        let out = skewverify(&["check", "--spec", f.path().to_str().unwrap(), "--suite", "bialgebra"]);
        assert_eq!(code(&out), 2);
        assert!(String::from_utf8_lossy(&out.stderr).contains(needle));
    }
}

#[test]
fn missing_cobraiding_only_blocks_suites_that_need_it() {
    let mut spec: serde_json::Value = serde_json::from_str(find("z2_sign").unwrap().json).unwrap();
    let obj = spec.as_object_mut().unwrap();
    obj.remove("r");
    obj.remove("rbar");
    let f = spec_file(&spec.to_string());
    let path = f.path().to_str().unwrap();
    assert_eq!(code(&skewverify(&["check", "--spec", path, "--suite", "skew"])), 0);
    let out = skewverify(&["check", "--spec", path, "--suite", "braiding"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("no cobraiding"));
}

#[test]
fn non_bialgebra_fails_and_skips_the_rest() {
    let mut spec: serde_json::Value = serde_json::from_str(find("z2_sign").unwrap().json).unwrap();
    // ε(g) = 2 breaks the counit laws
    spec["eps"][1] = serde_json::json!("2");
    let f = spec_file(&spec.to_string());
    let out = skewverify(&[
        "check",
        "--spec",
        f.path().to_str().unwrap(),
        "--suite",
        "braiding",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let rep = json(&out);
    assert!(!failing(&rep).is_empty());
    assert!(rep["notes"][0].as_str().unwrap().contains("skipped"));
}

#[test]
fn injected_faults_are_detected() {
    let out = skewverify(&[
        "check",
        "--fixture",
        "z2_sign",
        "--suite",
        "derived",
        "--inject-fault",
        "corrupt-s-after-check",
    ]);
    assert_eq!(code(&out), 3, "{}", stdout(&out));
    assert!(stdout(&out).contains("inconsistent"));

    let out = skewverify(&[
        "check",
        "--fixture",
        "z2_sign",
        "--suite",
        "skew",
        "--inject-fault",
        "tamper-associator",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    assert!(failing(&json(&out)).contains(&"M2".to_string()));
}

#[test]
fn symmetric_flag_adds_symmetry_laws() {
    let args = ["check", "--fixture", "z4_f5", "--suite", "braiding", "--format", "json"];
    assert_eq!(code(&skewverify(&args)), 0);
    let out = skewverify(&[&args[..], &["--symmetric"]].concat());
    assert_eq!(code(&out), 1);
    assert_eq!(failing(&json(&out)), ["S1"]);
    assert_eq!(
        code(&skewverify(&[
            "check",
            "--fixture",
            "z2_sign",
            "--suite",
            "braiding",
            "--symmetric"
        ])),
        0
    );
}

#[test]
fn rejects_bad_options() {
    assert_eq!(
        code(&skewverify(&["check", "--fixture", "z2_sign", "--probe-dims", "4"])),
        2
    );
    assert_eq!(
        code(&skewverify(&["check", "--fixture", "z2_sign", "--suite", "nope"])),
        2
    );
    assert_eq!(code(&skewverify(&["check", "--fixture", "nope"])), 2);
    assert_eq!(code(&skewverify(&["check", "--fixture", "z2_sign", "--jobs", "0"])), 2);
    assert_eq!(code(&skewverify(&["check"])), 2);
}
