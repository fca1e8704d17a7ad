mod common;

use std::path::Path;
use std::process::{Command, Output};

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyadic-atlas"))
        .args(args)
        .env("DYADIC_ATLAS_THREADS", "2")
        .output()
        .unwrap()
}

fn family(name: &str) -> String {
    common::catalog_dir()
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn certify_exit_codes() {
    let o = atlas(&["certify", "--family", &family("third-shift")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["condition1"]["1-2/1"]["bound"], "1/3");
    assert_eq!(v["overall"], "ADJACENT");

    let o = atlas(&["certify", "--family", &family("base2-base3")]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["condition1"]["1-2/1"]["witness"].is_object());

    // an origin gap of 2^-30 cannot be resolved within 20 generations
    let dir = tempfile::tempdir().unwrap();
    let tiny = write(
        dir.path(),
        "tiny.json",
        r#"{"dimension": 1, "grids": [
            {"base": 2, "delta": ["0"], "digits": {"period": [[0]]}},
            {"base": 2, "delta": ["1/1073741824"], "digits": {"period": [[0], [1]]}}]}"#,
    );
    let o = atlas(&[
        "certify",
        "--family",
        &tiny,
        "--depth-small",
        "20",
        "--output",
        "table",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("overall: Undecided"));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn input_errors_exit_three_with_paths() {
    let dir = tempfile::tempdir().unwrap();
    let too_few = write(
        dir.path(),
        "few.json",
        r#"{"dimension": 2, "grids": [{"base": 2, "delta": ["0", "0"], "digits": {"period": [[0, 0]]}}]}"#,
    );
    let o = atlas(&["certify", "--family", &too_few]);
    assert_eq!(o.status.code(), Some(3));

    let bad_digit = write(
        dir.path(),
        "digit.json",
        r#"{"dimension": 1, "grids": [
            {"base": 2, "delta": ["0"], "digits": {"period": [[0]]}},
            {"base": 2, "delta": ["1/3"], "digits": {"period": [[0], [5]]}}]}"#,
    );
    let o = atlas(&["certify", "--family", &bad_digit]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("grids[1].digits.period[1][0]"));

    let bad_rational = write(
        dir.path(),
        "rational.json",
        r#"{"dimension": 1, "grids": [
            {"base": 2, "delta": ["1/x"], "digits": {"period": [[0]]}},
            {"base": 2, "delta": ["1/3"], "digits": {"period": [[0]]}}]}"#,
    );
    let o = atlas(&["certify", "--family", &bad_rational]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("grids[0].delta[0]"));

    assert_eq!(atlas(&["certify"]).status.code(), Some(3));
}

#[test]
fn estimate_is_byte_identical() {
    let args = [
        "estimate",
        "--family",
        &family("third-shift"),
        "--scales",
        "-3..3",
        "--samples",
        "25",
        "--seed",
        "9",
    ];
    let a = atlas(&args);
    let b = atlas(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(
        text.lines().next().unwrap(),
        "scale,samples,max_ratio_num,max_ratio_den,worst_cube_corner,worst_cube_side,covered_by_grid"
    );
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn cover_and_witness() {
    let o = atlas(&[
        "cover",
        "--family",
        &family("third-shift"),
        "--corner",
        "-1/1000",
        "--side",
        "503/1500",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ratio"], "6000/503");

    let o = atlas(&[
        "witness",
        "--n1",
        "2",
        "--n2",
        "3",
        "--delta",
        "1/5",
        "--tolerance",
        "1/10",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"outcome\": \"found\""));
    let o = atlas(&[
        "witness", "--n1", "4", "--n2", "8", "--delta", "1/3", "--m-max", "20",
    ]);
    assert_eq!(o.status.code(), Some(1));

    let o = atlas(&["witness", "--family", &family("shared-tail")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["condition"], 2);
}

#[test]
fn construct_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (name, extra) in [
        ("third-shift", vec!["--drop-generations", "3"]),
        (
            "plane-thirds",
            vec!["--grid", "2", "--shift", "1,2", "--depth", "8"],
        ),
        ("base2-base3", vec!["--drop-generations", "2"]),
    ] {
        let out = dir
            .path()
            .join(format!("{name}.json"))
            .display()
            .to_string();
        let fam = family(name);
        let mut args = vec!["construct", "--family", fam.as_str(), "--out", out.as_str()];
        args.extend(extra);
        assert_eq!(atlas(&args).status.code(), Some(0));
        let before = atlas(&["certify", "--family", &fam]).status.code();
        let after = atlas(&["certify", "--family", &out]).status.code();
        assert_eq!(before, after, "{name}");
    }
}

#[test]
fn project_writes_one_dimensional_grids() {
    let o = atlas(&[
        "project",
        "--family",
        &family("plane-collision"),
        "--coordinate",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let fam = dyadic_atlas::io::parse_family(&stdout(&o)).unwrap();
    assert_eq!((fam.dimension, fam.grids.len()), (1, 3));
    assert_eq!(fam.grids[2].origin(), &[dyadic_atlas::exact::rat(1, 3)]);
    assert_eq!(
        atlas(&[
            "project",
            "--family",
            &family("plane-collision"),
            "--coordinate",
            "3"
        ])
        .status
        .code(),
        Some(3)
    );
}
