use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn crmostow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crmostow")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn export(dir: &Path, name: &str, params: Option<&str>) -> String {
    let mut args = vec!["catalog", "export", name];
    if let Some(p) = params {
        args.extend(["--params", p]);
    }
    let out = crmostow(&args);
    assert!(out.status.success());
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

fn computed<'a>(report: &'a Value, key: &str) -> &'a Value {
    let inv = &report["invariants"][key];
    assert_eq!(inv["source"], "computed");
    &inv["value"]
}

#[test]
fn catalog_list_names_every_entry() {
    let out = crmostow(&["catalog", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["su22_f12", "su23_f13", "su23_f12", "grassmann_pair", "so_n_symmetric", "upper_triangular_horocycle"] {
        assert!(text.lines().any(|l| l == name), "{name} missing");
    }
}

#[test]
fn grassmann_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = export(dir.path(), "grassmann_pair", Some("1,2,3,1"));
    let r = stdout_json(&crmostow(&["analyze", &input]));
    assert_eq!(r["schema"], "crmostow/1");
    assert_eq!(computed(&r, "n_reductive"), &Value::Bool(true));
    assert_eq!(computed(&r, "hnr"), &Value::Bool(true));
    assert_eq!(computed(&r, "witt_lower_bound"), 1);
    assert_eq!(r["cohomology"]["low"], serde_json::json!([0]));
    assert_eq!(r["cohomology"]["high"], serde_json::json!([3]));
    assert_eq!(r["expected"]["dim_m_minus"]["source"], "paper-expected");
}

#[test]
fn su22_is_hnr_but_not_strict() {
    let dir = tempfile::tempdir().unwrap();
    let input = export(dir.path(), "su22_f12", None);
    let r = stdout_json(&crmostow(&["analyze", &input]));
    assert_eq!(computed(&r, "strict_hnr"), &Value::Bool(false));
    assert_eq!(computed(&r, "hnr"), &Value::Bool(true));
    assert_eq!(computed(&r, "witt_lower_bound"), 0);
    assert_eq!(r["discrepancies"], serde_json::json!([]));
}

#[test]
fn open_basis_exits_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("open.json");
    std::fs::write(
        &path,
        r#"{"n": 2, "ambient": "sl", "basis": [[[[0,0],[1,0]],[[0,0],[0,0]]], [[[0,0],[0,0]],[[1,0],[0,0]]]]}"#,
    )
    .unwrap();
    let out = crmostow(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed"));
}

#[test]
fn random_decomposition_reconstructs() {
    let out = crmostow(&["decompose", "--catalog", "grassmann_pair", "--params", "1,2,3,1", "--random", "--seed", "7"]);
    let r = stdout_json(&out);
    assert!(r["residual"].as_f64().unwrap() < 1e-8);
    assert_eq!(r["restarts_agree"], true);
}

#[test]
fn identity_decomposes_trivially() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    let id: Vec<Vec<[f64; 2]>> = (0..4).map(|i| (0..4).map(|j| [if i == j { 1.0 } else { 0.0 }, 0.0]).collect()).collect();
    std::fs::write(&path, serde_json::to_string(&id).unwrap()).unwrap();
    let r = stdout_json(&crmostow(&["decompose", "--catalog", "su22_f12", "--zeta", path.to_str().unwrap()]));
    assert!(r["x_norm"].as_f64().unwrap() < 1e-10);
    for row in r["Z"].as_array().unwrap() {
        for z in row.as_array().unwrap() {
            assert!(z[0].as_f64().unwrap().abs() < 1e-10 && z[1].as_f64().unwrap().abs() < 1e-10);
        }
    }
}

#[test]
fn exhaust_probe_has_one_negative_direction() {
    let out = crmostow(&[
        "exhaust", "--catalog", "grassmann_pair(1,2,3,1)", "--random", "--seed", "3", "--probe", "tangent",
    ]);
    let r = stdout_json(&out);
    assert!(r["phi"].as_f64().unwrap() >= 0.0);
    assert_eq!(r["probe"]["neg"], 1);
}

#[test]
fn corrupted_expected_values_are_named() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("expected.json");
    std::fs::write(&path, r#"{"su22_f12": {"nu": 2, "hnr": true}}"#).unwrap();
    let out = crmostow(&["verify", "--suite", "structural", "--expected", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("su22_f12: nu"), "{err}");
    let tap = String::from_utf8_lossy(&out.stdout);
    assert!(tap.lines().any(|l| l.starts_with("not ok") && l.contains("su22_f12: nu")));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = export(dir.path(), "su23_f12", None);
    let a = crmostow(&["analyze", &input, "--seed", "5"]);
    let b = crmostow(&["analyze", &input, "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
