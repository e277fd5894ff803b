use std::process::{Command, Output};

fn syzcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syzcover")).args(args).output().unwrap()
}

#[test]
fn passing_run_exits_zero_with_json() {
    let out = syzcover(&["verify", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["prime"], 3);
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["stats"]["total_fiber"], 48);
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["verify", "--prime", "2"][..],
        &["verify", "--prime", "21"],
        &["verify", "--prime", "x"],
        &["verify", "--prime", "3", "--checks", "everything"],
        &["verify", "--prime", "3", "--format", "yaml"],
        &["verify"],
        &["frobnicate"],
    ] {
        assert_eq!(syzcover(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn strict_skipped_census_exits_one() {
    let out = syzcover(&["verify", "--prime", "3", "--checks", "fiber", "--max-field-size", "10", "--strict"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], "fail");
    assert_eq!(v["checks"][0]["status"], "skipped");
}

#[test]
fn skipped_census_alone_still_passes() {
    let out = syzcover(&["verify", "--prime", "11", "--checks", "fiber"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = syzcover(&["verify", "--prime", "5", "--checks", "fiber", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let stdout = syzcover(&["verify", "--prime", "5", "--checks", "fiber"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn unwritable_output_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    let out = syzcover(&["verify", "--prime", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn batch_mode_emits_one_report_per_prime() {
    let out = syzcover(&["verify", "--primes", "7,3,5", "--checks", "fiber"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let primes: Vec<_> = v.as_array().unwrap().iter().map(|r| r["prime"].as_u64().unwrap()).collect();
    assert_eq!(primes, [7, 3, 5]);
}

#[test]
fn text_format_is_a_table() {
    let out = syzcover(&["verify", "--prime", "3", "--checks", "lemmas", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("prime 3: pass"));
    assert!(text.contains("syzygy.alpha"));
}
