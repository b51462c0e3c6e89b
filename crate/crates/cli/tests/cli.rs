use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sdl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdl"))
        .args(args)
        .env_remove("SDL_BOUNDS_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn finite_suite_passes_with_thirty_laws() {
    let out = sdl(&["verify", "--suite", "finite", "--max-atoms", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["totals"]["laws"].as_u64().unwrap() >= 30);
    assert_eq!(v["totals"]["fail"], 0);
}

#[test]
fn symbolic_suite_reports_undetermined_without_failing() {
    let out = sdl(&["verify", "--suite", "symbolic", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let entries = v["entries"].as_array().unwrap();
    let status = |id: &str| entries.iter().find(|e| e["id"] == id).unwrap()["status"].clone();
    assert_eq!(status("symbolic.dz_certificate"), "pass");
    assert_eq!(status("symbolic.extension_dz"), "undetermined");
}

#[test]
fn zero_atoms_is_a_passing_report() {
    let out = sdl(&["verify", "--suite", "finite", "--max-atoms", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let out = sdl(&[
            "verify",
            "--suite",
            "all",
            "--format",
            "json",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
    let seq = sdl(&["verify", "--sequential"]);
    let par = sdl(&["verify"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn bounds_override_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sdl"))
        .args(["verify", "--format", "json"])
        .env("SDL_BOUNDS_OVERRIDE", "max_atoms=1,max_points=2,suite=finite")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["config"]["max_atoms"], 1);
    assert_eq!(v["config"]["suite"], "finite");
    let bad = Command::new(env!("CARGO_BIN_EXE_sdl"))
        .arg("verify")
        .env("SDL_BOUNDS_OVERRIDE", "max_atoms")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sdl(&["verify", "--suite", "infinite"]).status.code(), Some(2));
    assert_eq!(sdl(&["verify", "--max-atoms", "9"]).status.code(), Some(2));
    assert_eq!(sdl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        sdl(&["dualize", "/nonexistent.json", "--functor", "S"]).status.code(),
        Some(2)
    );
}

#[test]
fn stone_of_power_two_is_discrete_two_points() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p2.json", r#"{"kind":"power","atoms":2}"#);
    let out = sdl(&["dualize", &f, "--functor", "S", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["image"]["kind"], "space");
    assert_eq!(v["image"]["points"], 2);
    assert_eq!(v["image"]["basis"], serde_json::json!([[0], [1]]));
    assert_eq!(v["stamp"]["holds"], true);
}

#[test]
fn frak_f_of_discrete_space_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "d2.json",
        r#"{"kind":"space","points":2,"basis":[[0],[1]]}"#,
    );
    let out = sdl(&["dualize", &f, "--functor", "FrakF", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["image"]["A"], v["image"]["B"]);
    assert_eq!(v["image"]["alpha"], serde_json::json!({"0": 0, "1": 1, "2": 2, "3": 3}));
}

#[test]
fn psi_on_a_non_z_algebra_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "nz.json",
        r#"{"kind":"zalgebra","algebra":{"kind":"power","atoms":2},"points":[0]}"#,
    );
    let out = sdl(&["dualize", &f, "--functor", "Psi"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a z-algebra"));
}

#[test]
fn wrong_category_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p1.json", r#"{"kind":"power","atoms":1}"#);
    let out = sdl(&["dualize", &f, "--functor", "G"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not apply"));
}

#[test]
fn roundtrip_and_dwinger() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p3.json", r#"{"kind":"power","atoms":3}"#);
    let out = sdl(&["roundtrip", &f, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["iso"], true);
    let out = sdl(&["dwinger", "--points", "3", "--symbolic", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["bases"].as_array().unwrap().len(), 1);
    assert_eq!(v["symbolic"]["inequivalent"], true);
}
