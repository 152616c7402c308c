use std::process::{Command, Output};

use hookdiff::verifier::{list_identities, Status, VerificationReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn core_of_example() {
    let o = run(&["core", "--m", "2", "--partition", "8,7,5,3,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4,3,2,1\n");
}

#[test]
fn stat_lists_cells() {
    let o = run(&["stat", "--partition", "1,1", "--alpha", "1", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("h_{1,1}(1,1) = 1\n"), "{out}");
    assert!(out.contains("cells: (1,1)"), "{out}");
}

#[test]
fn empty_partition_dash() {
    let o = run(&["quotient", "--m", "3", "--partition", "-"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "quotient: (-; -; -)\nshift: (0,0,0)\n");
}

#[test]
fn verify_bf_main_json() {
    let o = run(&["verify", "--id", "bf-main", "--qmax", "18", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.status, Status::Verified);
    assert_eq!(r.qmax, 18);
    assert!(r.first_mismatch.is_none());
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        vec!["verify", "--id", "bf-main", "--qmax", "10", "--json"],
        vec!["conjecture", "--name", "mcore", "--m", "2", "--core", "-", "--alpha", "0", "--beta", "2", "--nmax", "6", "--json"],
        vec!["verify", "--id", "prestrict", "--m", "3", "--core", "1", "--qmax", "9", "--json"],
    ] {
        let text = stdout(&run(&args));
        let r: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
    }
}

#[test]
fn seedless_output_is_deterministic() {
    let base = ["verify", "--id", "genhook20", "--j", "-1", "--qmax", "14", "--json", "--seedless"];
    let a = run(&[&base[..], &["--threads", "1"]].concat());
    let b = run(&[&base[..], &["--threads", "4"]].concat());
    let c = run(&base);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(stdout(&a).contains("\"elapsed_ms\": 0"));
}

#[test]
fn counterexample_exits_one() {
    // h_{0,2} never counts a cell, so the product side cannot match.
    let o = run(&["conjecture", "--name", "mcore", "--m", "2", "--core", "-", "--alpha", "0", "--beta", "2", "--nmax", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["core", "--m", "2", "--partition", "1,3"],
        vec!["core", "--partition", "3"],
        vec!["verify", "--id", "no-such-identity"],
        vec!["verify", "--id", "multisum"],
        vec!["series", "--core", "2", "--m", "2"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn list_identities_covers_registry() {
    let o = run(&["list-identities"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for i in list_identities() {
        assert!(out.lines().any(|l| l.starts_with(i.id)), "{}", i.id);
    }
    let j = run(&["list-identities", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), list_identities().len());
}

#[test]
fn series_lowest_degree_first() {
    let o = run(&["series", "--qmax", "4"]);
    assert_eq!(stdout(&o), "1 + q + (1 + t)*q^2 + (2 + t)*q^3 + (2 + 2*t + t^2)*q^4 + O(q^5)\n");
    let j = run(&["series", "--qmax", "2", "--rhs", "bf-main", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["triples"], serde_json::json!([[0, 0, "1"], [1, 0, "1"], [2, 0, "1"], [2, 1, "1"]]));
}

#[test]
fn words_and_catalan() {
    let o = run(&["words", "--m", "4", "--partition", "16,6,6,6,5"]);
    assert!(stdout(&o).ends_with("inversions: 3\n"));
    let c = run(&["catalan", "--n", "3"]);
    assert!(stdout(&c).starts_with("q^binom(n,2) C_n(1/q) = 1 + q + 2*q^2 + q^3\n"));
}
