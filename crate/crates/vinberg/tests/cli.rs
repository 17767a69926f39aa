//! Black-box tests of the `vinberg` binary: envelope shape, documented
//! outputs, exit codes, and file input/output.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vinberg"))
        .args(args)
        .output()
        .expect("CLI invocation")
}

fn json_stdout(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn scratch_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("vinberg-cli-{}-{name}", std::process::id()));
    path
}

#[test]
fn envelope_carries_schema_command_and_seed() {
    let value = json_stdout(&run(&["rank", "--dims", "1,2,1", "--seed", "3"]));
    assert_eq!(value["schema"], 1);
    assert_eq!(value["command"], "rank");
    assert_eq!(value["seed"], 3);
    assert_eq!(value["report"]["rank"], 1);
}

#[test]
fn quasisplit_reports_the_documented_class() {
    let value = json_stdout(&run(&["quasisplit", "--dims", "2,2,3"]));
    assert_eq!(value["report"]["quasi_split"], "quasi-split");
    let split = json_stdout(&run(&["quasisplit", "--dims", "1,1,1"]));
    assert_eq!(split["report"]["quasi_split"], "split");
}

#[test]
fn window_for_two_lines_is_minus_one_to_one() {
    let value = json_stdout(&run(&["window", "--ranks", "1,1", "--genus", "2"]));
    let ds: Vec<i64> = value["report"]["entries"]
        .as_array()
        .expect("entries array")
        .iter()
        .map(|entry| entry["d"].as_i64().expect("integer degree"))
        .collect();
    assert_eq!(ds, vec![-1, 0, 1]);
}

#[test]
fn hitchin_base_for_sl3_has_total_dim_eight() {
    let value = json_stdout(&run(&[
        "hitchin-base",
        "--type",
        "sl",
        "--n",
        "3",
        "--genus",
        "2",
    ]));
    assert_eq!(value["report"]["degrees"], serde_json::json!([2, 3]));
    assert_eq!(value["report"]["total_dim"], 8);
}

#[test]
fn validation_errors_exit_two() {
    let empty = run(&["grade", "--dims", "0,0"]);
    assert_eq!(empty.status.code(), Some(2));

    let over_cap = run(&["grade", "--dims", "9"]);
    assert_eq!(over_cap.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&over_cap.stderr).contains("VINBERG_MAX_N"),
        "cap message should name the override variable"
    );

    let unknown_fault = run(&["verify", "--inject-fault", "bogus"]);
    assert_eq!(unknown_fault.status.code(), Some(2));
}

#[test]
fn malformed_json_input_names_the_missing_field() {
    let path = scratch_path("higgs.json");
    fs::write(
        &path,
        br#"{"m":2,"ranks":[1,1],"degrees":[1,-1],"phi_plus_rank":1,"phi_minus_rank":1}"#,
    )
    .unwrap();
    let output = run(&["toledo", "--in", path.to_str().unwrap()]);
    fs::remove_file(&path).ok();
    assert_eq!(output.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&output.stderr).contains("genus"),
        "error should name the missing field: {}",
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn text_format_renders_without_json_braces() {
    let output = run(&["quasisplit", "--dims", "2,2,3", "--format", "text"]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(!text.trim_start().starts_with('{'));
    assert!(text.contains("quasi_split"));
    assert!(text.contains("quasi-split"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = scratch_path("grade.json");
    let output = run(&["grade", "--dims", "1,2", "--out", path.to_str().unwrap()]);
    assert!(output.status.success());
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    fs::remove_file(&path).ok();
    assert_eq!(written["schema"], 1);
    assert_eq!(written["command"], "grade");
    assert_eq!(written["report"]["pass"], true);
}

#[test]
fn toledo_flags_match_the_documented_identity() {
    let value = json_stdout(&run(&[
        "toledo",
        "--ranks",
        "1,1",
        "--degrees",
        "1,-1",
        "--genus",
        "2",
    ]));
    assert_eq!(value["report"]["tau"], "2");
    assert_eq!(value["report"]["maximal"], true);
    assert_eq!(value["report"]["cayley"], true);
}
