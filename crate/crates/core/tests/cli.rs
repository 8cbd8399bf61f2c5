use std::process::{Command, Output};

fn linper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linper"))
        .args(args)
        .env_remove("LINPER_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fibermass_row() {
    let o = linper(&["fibermass", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "d\td'\tdegree\tleading\t|E|\tmatch\n1\t2\t-2\t3\t3\ttrue\n");
}

#[test]
fn orbits_row() {
    let o = linper(&["orbits", "1", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1\t1\t2\t3\t3\t3\ttrue"));
}

#[test]
fn json_output_parses() {
    let o = linper(&["--format", "json", "orbits", "1", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ok"], true);
    let pairs = v["rows"][0]["barE"].as_array().unwrap();
    assert!(pairs.contains(&serde_json::json!({"w": "(1 2)", "J": [2]})));
}

#[test]
fn strata_lists_test_vectors() {
    let o = linper(&["strata", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("stratum\t{1,2}|{3,4}\t(1 3)(2 4) (1 4)(2 3)"));
    assert!(out.contains("stratum\t{1,3}|{2,4}\t(1 2)(3 4)"));
    assert!(out.contains("induced-iso\t\ttrue"));
}

#[test]
fn lemma242_and_flagdim_pass() {
    assert_eq!(linper(&["lemma242", "2", "1", "3"]).status.code(), Some(0));
    let o = linper(&["flagdim", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1\t2\t-2\t0\ttrue"));
}

#[test]
fn levi_sweep_with_witnesses() {
    let o = linper(&["--format", "json", "levi", "2", "1/2", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v["rows"]["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w["mu"] == serde_json::json!([-1, 0]) && w["mu_prime"] == serde_json::json!([0, -1]))));
}

#[test]
fn invalid_configs_exit_2() {
    for args in [
        vec!["fibermass", "2", "1"],
        vec!["orbits", "3", "3", "2"],
        vec!["orbits", "1", "1", "5"],
        vec!["levi", "4", "1,2/2,3", "1", "1"],
        vec!["--bound", "nope=3", "selftest"],
        vec!["--jobs", "0", "fibermass", "1", "1"],
        vec!["bogus"],
    ] {
        assert_eq!(linper(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn non_antistandard_levi_still_checks_inequality() {
    let o = linper(&["levi", "4", "1,2/3,4", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{1,2}{3,4}\tfalse"));
}

#[test]
fn output_is_deterministic() {
    let a = linper(&["--jobs", "2", "--format", "json", "strata", "1", "3"]);
    let b = linper(&["--jobs", "1", "--format", "json", "strata", "1", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selftest_passes() {
    let o = linper(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with("\ttrue")).count(), 9);
}
