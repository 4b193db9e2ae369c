use std::process::{Command, Output};

use serde_json::Value;

fn baer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_baer"))
        .args(args)
        .output()
        .expect("run baer")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn schur_multiplier_text() {
    let o = baer(&["multiplier", "--group", "Z/12 + Z/6 + Z/2", "--nilpotent", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("canonical:   Z/6 + Z/2 + Z/2"), "{text}");
    assert!(text.contains("formula:     Z/6^(1) + Z/2^(2)"), "{text}");
}

#[test]
fn metabelian_json() {
    let o = baer(&["multiplier", "--group", "Z^2+Z/4+Z/2", "--class-row", "1,1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["free_rank"], "0");
    assert_eq!(v["f_values"], serde_json::json!(["0", "3", "15"]));
    assert_eq!(v["multiplicities"], serde_json::json!(["0", "3", "12"]));
    let factors = v["invariant_factors"].as_array().unwrap();
    assert_eq!(factors.len(), 15);
    assert_eq!(factors.iter().filter(|f| *f == "4").count(), 3);
    assert_eq!(
        v["paper_shape"][1],
        serde_json::json!({"order": "4", "multiplicity": "3"})
    );
}

#[test]
fn solvable_flag_matches_class_row() {
    let a = baer(&["multiplier", "--group", "Z^3 + Z/6", "--solvable", "2", "--json"]);
    let b = baer(&["multiplier", "--group", "Z^3 + Z/6", "--class-row", "(1,1)", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn large_free_rank_prints_full_decimal() {
    let o = baer(&["multiplier", "--group", "Z^10", "--class-row", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2964775275"));
    let o = baer(&["multiplier", "--group", "Z^10", "--class-row", "2,3", "--scientific"]);
    assert!(stdout(&o).contains("2.96e9"), "{}", stdout(&o));
}

#[test]
fn witt_command() {
    let o = baer(&["witt", "--weight", "6", "--letters", "2"]);
    assert_eq!(stdout(&o).trim(), "9");
    let o = baer(&["witt", "--row", "1,1", "--letters", "4"]);
    assert_eq!(stdout(&o).trim(), "15");
    let o = baer(&["witt", "--weight", "2", "--letters", "100000000000000000000"]);
    assert_eq!(stdout(&o).trim(), "4999999999999999999950000000000000000000");
}

#[test]
fn hall_enumerate_lists_basics() {
    let o = baer(&["hall", "enumerate", "--letters", "2", "--weight", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[[x2,x1],x1]"), "{text}");
    assert!(text.contains("[[x2,x1],x2]"), "{text}");
}

#[test]
fn verify_commands_pass() {
    for cmd in ["schur", "counts", "iterated"] {
        let o = baer(&["verify", cmd]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stderr(&o));
        assert!(stdout(&o).contains("0 failures"));
    }
}

#[test]
fn parse_errors_exit_two_with_offset() {
    for (input, offset) in [
        ("Z/0", 2),
        ("Z + ", 4),
        ("Q", 0),
        ("Z//2", 2),
        ("Z/2^3", 4),
        ("Z^-1", 2),
    ] {
        let o = baer(&["multiplier", "--group", input, "--nilpotent", "1"]);
        assert_eq!(o.status.code(), Some(2), "{input}");
        let err = stderr(&o);
        assert!(err.starts_with("error[parse]:"), "{err}");
        assert!(err.contains(&format!("at byte {offset}")), "{input}: {err}");
        assert_eq!(err.lines().count(), 1);
    }
}

#[test]
fn invalid_arguments_exit_two() {
    let o = baer(&["multiplier", "--group", "Z", "--nilpotent", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[invalid-argument]:"));
    let o = baer(&["multiplier", "--group", "Z"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[usage]:"));
    assert!(stderr(&o).contains("--nilpotent"), "{}", stderr(&o));
    let o = baer(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resource_limit_exits_three() {
    let o = baer(&["hall", "enumerate", "--letters", "3", "--weight", "6", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error[resource-limit]:"));
}

#[test]
fn help_exits_zero() {
    let o = baer(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("multiplier"));
}
