use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;
use sol_geom::verify::brute_force_params;
use sol_geom::SolPoint;

fn solgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solgeom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = solgeom(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn csv_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let out = solgeom(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|x| x.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn f(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn triangle_table_row() {
    let v = json(&["triangle", "0,0,0", "-1,1,1", "0.5,5,0.5"]);
    assert_eq!(v["command"], "triangle");
    assert!((v["results"]["angle_sum"].as_f64().unwrap() - 3.17066).abs() < 1e-4);
    assert_eq!(v["results"]["coplanar"], false);
    assert!(v["version"].is_string());
    assert_eq!(v["tolerances"]["check"], 1e-9);
}

#[test]
fn triangle_in_yz_plane() {
    let v = json(&["triangle", "0,0,0", "0,1,1", "0,2,0.5"]);
    assert!((v["results"]["angle_sum"].as_f64().unwrap() - PI).abs() < 1e-12);
    assert_eq!(v["results"]["coplanar"], true);
    assert_eq!(v["results"]["coordinate_planar"], true);
}

#[test]
fn triangle_degrees() {
    let v = json(&["--degrees", "triangle", "0,0,0", "0,1,1", "0,2,0.5"]);
    assert!((v["results"]["angle_sum"].as_f64().unwrap() - 180.0).abs() < 1e-9);
    assert_eq!(v["angle_unit"], "degrees");
}

#[test]
fn triangle_csv_is_field_value() {
    let (header, rows) = csv_rows(&[
        "--format",
        "csv",
        "triangle",
        "0,0,0",
        "-1,1,1",
        "0.5,5,0.5",
    ]);
    assert_eq!(header, ["field", "value"]);
    let sum = rows.iter().find(|r| r[0] == "angle_sum").unwrap();
    assert!((f(&sum[1]) - 3.17066).abs() < 1e-4);
}

#[test]
fn coincident_vertices_exit_2() {
    let out = solgeom(&["triangle", "0,0,0", "1,1,1", "1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate triangle"));
}

#[test]
fn malformed_numbers_exit_1() {
    assert_eq!(
        solgeom(&["triangle", "0,0,0", "1,x,1", "2,2,2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(solgeom(&["params", "1", "nan", "0"]).status.code(), Some(1));
    assert_eq!(solgeom(&["bogus"]).status.code(), Some(1));
}

#[test]
fn tables() {
    let (header, rows) = csv_rows(&["tables", "1", "--format", "csv"]);
    assert_eq!(header, ["value", "omega1", "omega2", "omega3", "sum"]);
    assert_eq!(rows.len(), 11);
    let last = rows.iter().find(|r| r[0] == "10").unwrap();
    assert!((f(&last[4]) - 3.18866).abs() < 1e-4);

    let (_, rows) = csv_rows(&["tables", "2", "--format", "csv"]);
    let row = rows.iter().find(|r| r[0] == "1/100").unwrap();
    assert!((f(&row[4]) - 3.15355).abs() < 1e-4);

    assert_eq!(solgeom(&["tables", "3"]).status.code(), Some(1));
}

#[test]
fn curve_samples() {
    let (header, rows) = csv_rows(&["curve", "0.7", "0", "3", "-n", "20", "--format", "csv"]);
    assert_eq!(header, ["index", "t", "x", "y", "z"]);
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| f(&r[4]) == 0.0));

    let (_, rows) = csv_rows(&["curve", "0.4", "-0.3", "2.5", "--format", "csv"]);
    let last = rows.last().unwrap();
    let (x, y, z) = (&last[2], &last[3], &last[4]);
    let p = json(&["params", x, y, z]);
    assert!((p["results"]["phi"].as_f64().unwrap() - 0.4).abs() < 1e-12);
    assert!((p["results"]["theta"].as_f64().unwrap() + 0.3).abs() < 1e-12);
    assert!((p["results"]["t"].as_f64().unwrap() - 2.5).abs() < 1e-12);
}

#[test]
fn yz_plane_side_curves_have_zero_x() {
    for end in [("0", "1", "1"), ("0", "2", "0.5")] {
        let p = json(&["params", end.0, end.1, end.2]);
        let phi = p["results"]["phi"].as_f64().unwrap().to_string();
        let theta = p["results"]["theta"].as_f64().unwrap().to_string();
        let t = p["results"]["t"].as_f64().unwrap().to_string();
        let (_, rows) = csv_rows(&["curve", &phi, &theta, &t, "--format", "csv"]);
        assert!(rows.iter().all(|r| f(&r[2]) == 0.0));
    }
}

#[test]
fn curve_domain_errors() {
    let out = solgeom(&["curve", "0", "2", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("-pi/2 <= theta <= pi/2"));
    assert_eq!(
        solgeom(&["curve", "0", "0.1", "1", "-n", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn params_cases() {
    let v = json(&["params", "1", "1", "0"]);
    assert!((v["results"]["phi"].as_f64().unwrap() - PI / 4.0).abs() < 1e-15);
    assert_eq!(v["results"]["theta"], 0.0);
    assert!((v["results"]["t"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-15);
    assert_eq!(v["results"]["case"], "z0");

    let v = json(&["params", "0", "0", "-3"]);
    assert_eq!(v["results"]["case"], "axis");
    assert_eq!(v["results"]["t"], 3.0);
    assert_eq!(v["results"]["distance"], 3.0);

    let v = json(&["params", "-1", "1", "1"]);
    let oracle = brute_force_params(SolPoint::new(-1.0, 1.0, 1.0), 32)
        .unwrap()
        .params;
    assert!((v["results"]["phi"].as_f64().unwrap() - oracle.dir.phi).abs() < 1e-8);
    assert!((v["results"]["theta"].as_f64().unwrap() - oracle.dir.theta).abs() < 1e-8);
    assert!((v["results"]["t"].as_f64().unwrap() - oracle.t).abs() < 1e-8);

    assert_eq!(solgeom(&["params", "0", "0", "0"]).status.code(), Some(2));
}

#[test]
fn distance() {
    let v = json(&["distance", "1,2,3", "1,2,-1"]);
    assert!((v["results"]["distance"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    let a = json(&["distance", "-1,1,1", "0.5,5,0.5"])["results"]["distance"]
        .as_f64()
        .unwrap();
    let b = json(&["distance", "0.5,5,0.5", "-1,1,1"])["results"]["distance"]
        .as_f64()
        .unwrap();
    assert!((a - b).abs() < 1e-9);
}

#[test]
fn sweep_matches_tables() {
    let (_, swept) = csv_rows(&[
        "sweep",
        "--a2",
        "-1,1,1",
        "--a3",
        "0.5,_,0.5",
        "--values",
        "-10,-2,-1,1/100,1/10,1/2,3/4,3/2,2,5,10",
        "--format",
        "csv",
    ]);
    let (_, table) = csv_rows(&["tables", "2", "--format", "csv"]);
    assert_eq!(swept, table);
}

#[test]
fn sweep_usage_errors() {
    let bad_template = solgeom(&[
        "sweep",
        "--a2",
        "-1,1,1",
        "--a3",
        "0.5,5,0.5",
        "--values",
        "1",
    ]);
    assert_eq!(bad_template.status.code(), Some(1));
    let no_values = solgeom(&["sweep", "--a2", "-1,1,1", "--a3", "0.5,5,_", "--values", ""]);
    assert_eq!(no_values.status.code(), Some(1));
}

#[test]
fn sweep_csv_round_trips() {
    let args = [
        "sweep",
        "--a1",
        "0.2,-0.4,0.1",
        "--a2",
        "-1,1,1",
        "--a3",
        "_,2,-0.5",
        "--values",
        "-3,0.25,1/3,4",
        "--format",
        "csv",
    ];
    let (_, first) = csv_rows(&args);
    let values: Vec<String> = first.iter().map(|r| r[0].clone()).collect();
    let joined = values.join(",");
    let mut again = args;
    again[8] = &joined;
    let (_, second) = csv_rows(&again);
    for (a, b) in first.iter().zip(&second) {
        for k in 1..5 {
            assert!((f(&a[k]) - f(&b[k])).abs() <= 1e-12);
        }
    }
}

#[test]
fn verify_default_run() {
    let v = json(&["verify", "--trials", "200"]);
    assert_eq!(v["results"]["violations"], 0);
    assert_eq!(v["results"]["suites"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_planar_suite() {
    let v = json(&["verify", "--trials", "300", "--suite", "planar"]);
    let worst = v["results"]["suites"][0]["worst"].as_f64().unwrap();
    assert!(worst < 1e-9);
}

#[test]
fn verify_is_reproducible() {
    let args = [
        "verify",
        "--trials",
        "100",
        "--seed",
        "77",
        "--suite",
        "theorem,roundtrip",
    ];
    let a = solgeom(&args);
    let b = solgeom(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_violation_exit_3() {
    // demanding a sum of at least π + 0.5 fails on flat triangles
    let out = solgeom(&[
        "verify", "--trials", "50", "--suite", "theorem", "--tol", "-0.5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("theorem") && err.contains("SolPoint"), "{err}");
}

#[test]
fn help_exits_zero() {
    assert_eq!(solgeom(&["--help"]).status.code(), Some(0));
}
