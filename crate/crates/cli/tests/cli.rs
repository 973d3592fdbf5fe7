use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn pcm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcm"))
        .args(args)
        .output()
        .expect("run pcm")
}

fn example() -> String {
    data("ss_example.pcm").display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn golden_identity_report() {
    let f = example();
    let out = pcm(&["identities", &f, "--subst", "alpha=-2", "--subst", "beta=0", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let golden = std::fs::read_to_string(data("ss_example_minus2.golden.json")).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn solve_paracontact_on_the_family() {
    let f = example();
    let out = pcm(&["solve", &f, "--condition", "paracontact", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["constraints"], serde_json::json!(["alpha + 2"]));
    assert_eq!(v["solutions"][0]["roots"], serde_json::json!(["-2"]));
}

#[test]
fn exit_code_zero_when_everything_holds() {
    let f = example();
    let out = pcm(&["check", &f, "--subst", "alpha=-2", "--subst", "beta=1/2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_code_three_when_conditional() {
    let out = pcm(&["check", &example()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("on {alpha + 2}"));
}

#[test]
fn exit_code_two_when_a_check_fails() {
    let f = example();
    let out = pcm(&["check", &f, "--subst", "alpha=1", "--subst", "beta=0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pcm(&["solve", &f, "--subst", "alpha=1", "--condition", "paracontact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_one_on_bad_input() {
    let f = example();
    for args in [
        vec!["identities", f.as_str(), "--only", "no.such.check"],
        vec!["check", f.as_str(), "--subst", "gamma=1"],
        vec!["check", f.as_str(), "--subst", "alpha"],
        vec!["dhomothety", f.as_str(), "--alpha", "-1"],
        vec!["check", "/nonexistent/file.pcm"],
    ] {
        let out = pcm(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(stderr(&out).starts_with("error: "), "{args:?}");
    }
}

#[test]
fn parse_errors_report_their_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pcm");
    let src = std::fs::read_to_string(data("ss_example.pcm"))
        .unwrap()
        .replace("[2,3]", "[2,2]");
    std::fs::write(&path, src).unwrap();
    let out = pcm(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("bad.pcm:7:12: bracket indices must differ"), "{err}");
}

#[test]
fn only_filters_checks() {
    let f = example();
    let out = pcm(&[
        "identities",
        &f,
        "--subst",
        "alpha=-2",
        "--only",
        "eq5.trl,prop43.k_trl",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ids: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["eq5.trl", "prop43.k_trl"]);
}

#[test]
fn dhomothety_emits_a_spec_the_checker_accepts() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("bar.pcm");
    let f = example();
    let out = pcm(&[
        "dhomothety",
        &f,
        "--subst",
        "alpha=-2",
        "--subst",
        "beta=0",
        "--alpha",
        "4",
        "--emit",
        out_path.to_str().unwrap(),
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("dhomothety.round_trip"));
    let emitted = std::fs::read_to_string(&out_path).unwrap();
    assert!(emitted.contains("metric diag(4, -4, 16)"), "{emitted}");
    let out = pcm(&["invariants", out_path.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["invariants"]["trl"], "-2");
}

#[test]
fn search_output_round_trips_through_the_parser() {
    let out = pcm(&["search", "--budget", "100", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let docs: Vec<&str> = text.split("# h ").skip(1).collect();
    assert_eq!(docs.len(), 44);
    let dir = tempfile::tempdir().unwrap();
    for (i, doc) in docs.iter().enumerate().take(6) {
        let body = doc.split_once('\n').unwrap().1;
        let p = dir.path().join(format!("s{i}.pcm"));
        std::fs::write(&p, body).unwrap();
        let out = pcm(&["check", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{body}");
    }
}
