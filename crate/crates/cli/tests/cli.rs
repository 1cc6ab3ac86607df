use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropreal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tool"], "tropreal");
    v["result"].clone()
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn classify_dissonance_sets() {
    let r = json(&["classify", "--poly", &data("dissonance.txt"), "--all-cones"]);
    assert_eq!(r["reports"].as_array().unwrap().len(), 15);
    assert_eq!(r["trop"].as_array().unwrap().len(), 11);
    assert_eq!(r["trop_rstar"].as_array().unwrap().len(), 8);
    assert_eq!(r["trop_rad"].as_array().unwrap().len(), 0);
    assert_eq!(r["chain"]["passed"], true);
}

#[test]
fn seed_is_echoed_and_output_reproducible() {
    let args = ["--seed", "7", "classify", "--poly", &data("dissonance.txt"), "--all-cones"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("seed: 7"));
}

#[test]
fn text_and_structured_agree() {
    let text = run(&["compactness", "--poly", &data("circle.txt")]);
    assert!(text.status.success());
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("kind: NONCOMPACT_RSTAR"));
    assert!(text.contains("- (-1,0)"));
    let r = json(&["compactness", "--poly", &data("circle.txt")]);
    assert_eq!(r["certificate"]["kind"], "NONCOMPACT_RSTAR");
}

#[test]
fn compactness_kinds() {
    for (file, kind) in [
        ("compact_a.txt", "COMPACT_RSTAR"),
        ("circle.txt", "NONCOMPACT_RSTAR"),
        ("quartic_c.txt", "NONCOMPACT_R"),
    ] {
        let r = json(&["compactness", "--poly", &data(file)]);
        assert_eq!(r["certificate"]["kind"], kind, "{file}");
        assert_eq!(r["replayed"], true);
    }
    let r = json(&["compactness", "--poly", &data("line.txt"), "--weight", "(1,1,0)"]);
    assert_eq!(r["certificate"]["kind"], "NONCOMPACT_R");
}

#[test]
fn components_verified_and_rejected() {
    let r = json(&[
        "components",
        "--poly",
        &data("twisted.txt"),
        "--components",
        &data("twisted_components.txt"),
        "--weight",
        "(2,1)",
    ]);
    let c = &r["classification"];
    assert_eq!(c["product_verified"], true);
    assert_eq!(c["components"][1]["verdict"], "REAL_RADICAL");
    assert!(c["conclusion"].as_str().unwrap().contains("(2,1) ∈ LL(V_ℝ*(I))"));

    let out = run(&[
        "components",
        "--poly",
        &data("twisted.txt"),
        "--components",
        &data("twisted_wrong.txt"),
        "--weight",
        "(2,1)",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stdout).contains("product_verified: false"));
}

#[test]
fn minors_audit_and_stability() {
    let r = json(&["audit-ugb", "--ideal", &data("minors_2x3.txt"), "--spot-checks", "3"]);
    assert_eq!(r["audit"]["passed"], true);
    assert_eq!(r["audit"]["spot_checks"].as_array().unwrap().len(), 3);
    let r = json(&["stability", "--ideal", &data("minors_2x3.txt")]);
    assert_eq!(r["certificate"]["kind"], "STABLE");
    assert_eq!(r["certificate"]["bound"]["formula"], "l(d) = d");
}

#[test]
fn initial_ideal_of_line() {
    let r = json(&["initial", "--ideal", &data("line.txt"), "--weight", "(1,-1,2)"]);
    assert_eq!(strs(&r["initial_ideal"]), vec!["z", "x"]);
    let r = json(&["initial", "--ideal", &data("line.txt"), "--weight", "(0,0,0)"]);
    assert_eq!(strs(&r["initial_ideal"]).len(), 2);
}

#[test]
fn orthant_flip_changes_input() {
    let r = json(&["--orthant", "(1,-1,1)", "initial", "--ideal", &data("line.txt"), "--weight", "(0,0,0)"]);
    assert_eq!(strs(&r["generators"]), vec!["x + y", "z - 1"]);
    let short = run(&["--orthant", "(-1,1)", "initial", "--ideal", &data("line.txt"), "--weight", "(1,1,1)"]);
    assert_eq!(short.status.code(), Some(3));
}

#[test]
fn sos_reduce_writes_a_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("reduced.txt");
    let out = out_path.to_string_lossy().into_owned();
    let r = json(&["sos-reduce", "--rep", &data("linear_rep.txt"), "--output", &out]);
    assert_eq!(r["verification"]["passed"], true);
    assert_eq!(r["trace"]["iterations"].as_array().unwrap().len(), 1);
    assert_eq!(r["representation"]["h"], "2*x - 2*y");
    // Reducing the reduced file again changes nothing.
    let again = json(&["sos-reduce", "--rep", &out]);
    assert_eq!(again["trace"]["iterations"].as_array().unwrap().len(), 0);
    assert_eq!(again["representation"], r["representation"]);
}

#[test]
fn exit_codes() {
    let parse = run(&["classify", "--poly", &data("bad_parse.txt"), "--all-cones"]);
    assert_eq!(parse.status.code(), Some(2));
    let missing = run(&["classify", "--poly", &data("no_such_file.txt"), "--all-cones"]);
    assert_ne!(missing.status.code(), Some(0));
    let non_principal = run(&["classify", "--poly", &data("line.txt"), "--all-cones"]);
    assert_eq!(non_principal.status.code(), Some(3));
    let bad_dim = run(&["initial", "--ideal", &data("line.txt"), "--weight", "(1,1)"]);
    assert_eq!(bad_dim.status.code(), Some(3));
    let falsified = run(&[
        "sos-reduce",
        "--rep",
        &data("falsified_rep.txt"),
        "--assert-qm-basis",
        "x-y and y-x",
    ]);
    assert_eq!(falsified.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&falsified.stderr).contains("BASIS-VIOLATION"));
    assert!(String::from_utf8_lossy(&falsified.stdout).contains("falsified"));
}

#[test]
fn spec_examples_for_single_commands() {
    let r = json(&["initial", "--ideal", &data("compact_a.txt"), "--weight", "(0,-1)"]);
    assert_eq!(strs(&r["initial_ideal"]), vec!["x^2 - 4*x + 7"]);
    let r = json(&["initial", "--ideal", &data("circle.txt"), "--weight", "(0,0)"]);
    assert_eq!(strs(&r["initial_ideal"]), vec!["x^2 + y^2 - 1"]);

    let r = json(&["classify", "--poly", &data("monomial.txt"), "--all-cones"]);
    assert!(r["trop"].as_array().unwrap().is_empty());
    assert!(r["notes"][0].as_str().unwrap().contains("monomial"));

    let r = json(&["classify", "--poly", &data("circle.txt"), "--all-cones"]);
    let yes: Vec<&Value> = r["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["trop_rad"] == "YES")
        .collect();
    assert_eq!(yes.len(), 2);
    assert!(yes.iter().all(|c| c["dim"] == 1));

    let r = json(&["stability", "--ideal", &data("parabola.txt")]);
    assert_eq!(r["certificate"]["kind"], "STABLE");
    assert_eq!(r["certificate"]["bound"]["formula"], "l(d) = 2d");
}

#[test]
fn dissonance_forms_through_initial() {
    let weights = [
        ("(1,1,1)", "x^4 - 4*x^3*y - 4*x^3*z + 6*x^2*y^2 + 12*x^2*y*z + 6*x^2*z^2 - 4*x*y^3 - 12*x*y^2*z - 12*x*y*z^2 - 4*x*z^3 + y^4 + 4*y^3*z + 6*y^2*z^2 + 4*y*z^3 + z^4"),
        ("(1,1,0)", "x^4 - 4*x^3*y + 6*x^2*y^2 - 4*x*y^3 + y^4"),
        ("(0,-1,-1)", "x^4 + x^2 - 2*x + 1"),
        ("(-1,-1,0)", "z^4 + 1"),
    ];
    for (w, form) in weights {
        let r = json(&["initial", "--ideal", &data("dissonance.txt"), "--weight", w]);
        assert_eq!(strs(&r["initial_ideal"]), vec![form], "{w}");
    }
}

#[test]
fn structured_reports_round_trip() {
    let out = run(&["--format", "structured", "classify", "--poly", &data("circle.txt"), "--all-cones"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
}

/// Text reports are compared byte for byte against checked-in snapshots.
#[test]
fn text_snapshots() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    for (args, snapshot) in [
        (vec!["compactness", "--poly", "circle.txt"], "golden/circle_compactness.txt"),
        (vec!["stability", "--ideal", "parabola.txt"], "golden/parabola_stability.txt"),
    ] {
        let out = Command::new(env!("CARGO_BIN_EXE_tropreal"))
            .current_dir(&dir)
            .args(&args)
            .output()
            .unwrap();
        assert!(out.status.success());
        let got = String::from_utf8(out.stdout).unwrap();
        let path = dir.join(snapshot);
        if std::env::var_os("UPDATE_SNAPSHOTS").is_some() {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &got).unwrap();
        }
        let want = std::fs::read_to_string(&path).unwrap();
        assert_eq!(got, want, "{snapshot}");
    }
}
