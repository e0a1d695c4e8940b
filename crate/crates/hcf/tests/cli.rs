//! Exit-code and output-shape contract of the binary.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hcf")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn expand_reports_frozen_fields() {
    let (code, stdout, _) = run(&["expand", "(3-4i)/(25)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["a0"], "0");
    assert_eq!(v["digits"][0], "3+4i");
    assert_eq!(v["convergents"][0]["q"], "3+4i");
    assert_eq!(v["convergents"][0]["abs_q"], 5.0);
    assert_eq!(v["terminated"], true);
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, stderr) = run(&["expand", "not-a-number"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, _) = run(&["verify", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_flag_values_exit_2() {
    let (code, _, _) = run(&["expand", "1/3+1/3i", "--precision", "32"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["expand", "1/3+1/3i", "--threads", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn precision_exhaustion_exits_3() {
    // a short decimal terminates quickly; pushing the certified orbit past
    // the terminating depth exhausts the error budget
    let (code, _, stderr) = run(&["expand", "0.3183098-0.1591549i", "--depth", "12"]);
    assert_eq!(code, 3, "{stderr}");
}

#[test]
fn text_format_mirrors_json_fields() {
    let (code, stdout, _) = run(&["expand", "(3-4i)/(25)", "--format", "text"]);
    assert_eq!(code, 0);
    for field in ["a0", "digits", "terminated", "convergents"] {
        assert!(stdout.contains(field), "missing {field} in:\n{stdout}");
    }
}
