use std::path::PathBuf;
use std::process::{Command, Output};

use ncqh::cli::omega_transcript;
use ncqh::structures::{quiver_qp, QPStructure, StructureError};
use ncqh::{Element, QuiverPresentation};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn ncqh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncqh")).args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ncqh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_writes_report_and_exits_zero() {
    let out = tmp("report.out");
    let o = ncqh(&["verify", "-q", &data("basic.quiver"), "--checks", "p1,p2,p3", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["p1", "p2", "p3"]);
}

#[test]
fn unknown_check_is_a_config_error() {
    let o = ncqh(&["verify", "-q", &data("basic.quiver"), "--checks", "p9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn omega_checks_need_omega() {
    let o = ncqh(&["verify", "-q", &data("basic.quiver"), "--checks", "b1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("omega required: run omega first or pass --derive-omega"));
}

#[test]
fn zero_samples_rejected_for_rep() {
    let o = ncqh(&["verify", "-q", &data("basic.quiver"), "--checks", "rep", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_alpha_is_a_config_error() {
    for alpha in ["1:0,2:1", "1:1", "x"] {
        let o = ncqh(&["verify", "-q", &data("basic.quiver"), "--checks", "rep", "--alpha", alpha]);
        assert_eq!(o.status.code(), Some(2), "{alpha}");
    }
}

#[test]
fn full_campaign_is_deterministic() {
    let args = |out: &str| {
        vec![
            "verify".to_string(),
            "-q".into(),
            data("loop.quiver"),
            "--checks".into(),
            "p1,p2,p3,b1,b2,b3,c,lemma72,prop54,prop74,thm53,lemma77,lemma710,rep".into(),
            "--derive-omega".into(),
            "--alpha".into(),
            "1:2".into(),
            "--samples".into(),
            "2".into(),
            "-o".into(),
            out.into(),
        ]
    };
    let (a, b) = (tmp("run_a.json"), tmp("run_b.json"));
    for p in [&a, &b] {
        let args = args(p.to_str().unwrap());
        let o = ncqh(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let report: serde_json::Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(report["numeric"]["points"][0]["rank_p3"]["rank"], 8);
}

#[test]
fn show_prints_normal_form() {
    let o = ncqh(&["show", "g_a * a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a · g_{a*}\n");
    let o = ncqh(&["show", "a b"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fuse_basic_gives_loop() {
    let out = tmp("fused.quiver");
    let o = ncqh(&["fuse", "-q", &data("basic.quiver"), "1", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(data("basic_fused.json")).unwrap());
    let fused = std::fs::read_to_string(&out).unwrap();
    let want = ncqh::quiver::parse_quiver(&std::fs::read_to_string(data("loop.quiver")).unwrap()).unwrap();
    assert_eq!(ncqh::quiver::parse_quiver(&fused).unwrap(), want);

    let again = ncqh(&["fuse", "-q", &data("basic.quiver"), "1", "2", "-o", out.to_str().unwrap()]);
    assert_eq!(again.stdout, o.stdout);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), fused);
}

#[test]
fn fuse_rejects_bad_vertices() {
    assert_eq!(ncqh(&["fuse", "-q", &data("point.quiver"), "1", "2"]).status.code(), Some(2));
    assert_eq!(ncqh(&["fuse", "-q", &data("basic.quiver"), "1", "1"]).status.code(), Some(2));
}

#[test]
fn omega_matches_golden() {
    let o = ncqh(&["omega", "-q", &data("basic.quiver")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(data("basic.omega.json")).unwrap());
}

#[test]
fn degenerate_structure_has_no_omega() {
    let s = quiver_qp(&QuiverPresentation::basic().double());
    let zero = QPStructure { p: Element::zero(), ..s };
    assert!(matches!(omega_transcript(&zero), Err(StructureError::NonDegeneracyNotEstablished(_))));
}

#[test]
fn missing_quiver_file_exits_two() {
    assert_eq!(ncqh(&["omega", "-q", "/nonexistent.quiver"]).status.code(), Some(2));
}
