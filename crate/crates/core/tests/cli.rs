mod common;

use std::path::PathBuf;
use std::process::Command;

use paramreg::cli::{run, Outcome};
use paramreg::problem::ProblemFile;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn paramreg(args: &[&str]) -> Outcome {
    run(std::iter::once("paramreg").chain(args.iter().copied()))
}

fn machine(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    serde_json::from_str(&paramreg(&all).stdout).unwrap()
}

#[test]
fn check_reports_regular_hudak() {
    let out = paramreg(&["check", &data("hudak.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("Regular, 4 slices, 0 roots\n"), "{}", out.stdout);
}

#[test]
fn witness_lists_exact_red_numb_points() {
    let out = paramreg(&["witness", &data("rednumb.json")]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.starts_with("Singular, 2 witnesses on 1 of 12 slices\n"));
    assert!(out.stdout.contains("k=2, eps=(+1,-1)"));
    assert!(out.stdout.contains("p = (1, -13/15, -1)"));
    assert!(out.stdout.contains("p = (1, -3/5, -1)"));
}

#[test]
fn exact_witnesses_feed_back_into_check() {
    let report = machine(&["witness", &data("rednumb.json")]);
    assert_eq!(report["status"], "Singular");
    assert_eq!(report["exit_code"], 2);
    let witnesses = report["result"]["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 2);
    for w in witnesses {
        let point: Vec<&str> = w["point"]
            .as_array()
            .unwrap()
            .iter()
            .map(|iv| {
                assert_eq!(iv[0], iv[1], "exact witnesses are degenerate");
                iv[0].as_str().unwrap()
            })
            .collect();
        let at = point.join(",");
        let out = paramreg(&["check", &data("rednumb.json"), "--at", &at]);
        assert_eq!(out.code, 2, "{at}");
        assert_eq!(out.stdout, "det A(p) = 0\nsingular\n");
    }
}

#[test]
fn point_evaluation_respects_the_box() {
    let nonsingular = paramreg(&["check", &data("hudak.json"), "--at", "36,33"]);
    assert_eq!(nonsingular.code, 0);
    assert!(nonsingular.stdout.ends_with("nonsingular\n"));
    let outside = paramreg(&["check", &data("hudak.json"), "--at", "30,33"]);
    assert_eq!(outside.code, 1);
    assert!(outside.stderr.starts_with("error:"));
    assert_eq!(paramreg(&["check", &data("hudak.json"), "--at", "30,33", "--lax"]).code, 0);
    assert_eq!(paramreg(&["check", &data("hudak.json"), "--at", "36"]).code, 1);
}

#[test]
fn radius_hull_and_suffcond_exit_codes() {
    let radius = paramreg(&["radius", &data("hudak.json"), "--digits", "6"]);
    assert_eq!(radius.code, 0);
    assert!(radius.stdout.starts_with("r* = 1.03288\n"), "{}", radius.stdout);
    let radius = paramreg(&["radius", &data("rednumb.json")]);
    assert_eq!(radius.code, 0);
    assert!(radius.stdout.starts_with("r* = 0.996412\n"), "{}", radius.stdout);

    assert_eq!(paramreg(&["hull", &data("hudak.json")]).code, 0);
    assert_eq!(paramreg(&["hull", &data("rednumb.json")]).code, 2);
    let no_rhs = paramreg(&["hull", &data("oneparam.json")]);
    assert_eq!(no_rhs.code, 1);
    assert!(no_rhs.stderr.contains("b0"));

    let suff = paramreg(&["suffcond", &data("oneparam.json")]);
    assert_eq!(suff.code, 0);
    assert!(suff.stdout.starts_with("Regular\n"));
    assert_eq!(paramreg(&["suffcond", &data("hudak.json")]).code, 3);
    assert_eq!(paramreg(&["check", &data("hudak.json"), "--reduce", "1"]).code, 3);
    assert_eq!(paramreg(&["check", &data("oneparam.json"), "--reduce", "1"]).code, 0);
}

#[test]
fn machine_output_is_deterministic_across_worker_counts() {
    for args in [
        vec!["check", "--exhaustive"],
        vec!["witness"],
        vec!["radius"],
        vec!["hull"],
    ] {
        for file in ["hudak.json", "rednumb.json"] {
            let path = data(file);
            let mut base = args.clone();
            base.extend([path.as_str(), "--format", "machine", "--parallel"]);
            let outputs: Vec<Outcome> = ["1", "4", "1"]
                .iter()
                .map(|n| {
                    let mut a = base.clone();
                    a.push(n);
                    paramreg(&a)
                })
                .collect();
            assert_eq!(outputs[0], outputs[1], "{args:?} {file}");
            assert_eq!(outputs[0], outputs[2]);
        }
    }
}

#[test]
fn selfcheck_passes_on_the_sample_problems() {
    for (cmd, file, code) in [
        ("check", "hudak.json", 0),
        ("check", "rednumb.json", 2),
        ("witness", "rednumb.json", 2),
        ("hull", "hudak.json", 0),
        ("radius", "hudak.json", 0),
        ("suffcond", "oneparam.json", 0),
    ] {
        let out = paramreg(&[cmd, &data(file), "--selfcheck"]);
        assert_eq!(out.code, code, "{cmd} {file}: {}", out.stderr);
        assert!(out.stdout.contains("selfcheck"));
        assert!(!out.stdout.contains("FAILED"));
    }
    let report = machine(&["check", &data("hudak.json"), "--selfcheck"]);
    let checks = report["selfcheck"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["ok"] == true));
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(data("hudak.json")).unwrap().replace("\"41\"", "\"forty-one\"");
    std::fs::write(&bad, text).unwrap();
    let out = paramreg(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("p[0][1]"), "{}", out.stderr);

    let missing = paramreg(&["check", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(missing.code, 1);
    assert_eq!(paramreg(&["frobnicate"]).code, 1);
    assert_eq!(paramreg(&["check", &data("hudak.json"), "--tol", "-1"]).code, 1);
    assert_eq!(paramreg(&["--help"]).code, 0);
}

#[test]
fn written_problem_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hudak.json");
    std::fs::write(&path, ProblemFile::from_matrix(&common::hudak()).to_json()).unwrap();
    let out = paramreg(&["check", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, paramreg(&["check", &data("hudak.json")]).stdout);
}

#[test]
fn binary_exit_status_matches() {
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_paramreg"))
            .args(args)
            .output()
            .unwrap()
    };
    let out = status(&["check", &data("hudak.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("Regular, 4 slices, 0 roots"));
    assert_eq!(status(&["witness", &data("rednumb.json")]).status.code(), Some(2));
    assert_eq!(status(&["suffcond", &data("hudak.json")]).status.code(), Some(3));
    assert_eq!(status(&["check", "/nonexistent.json"]).status.code(), Some(1));
}
