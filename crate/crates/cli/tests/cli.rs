use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn achromatic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_achromatic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds_for_table_two_row() {
    let out = achromatic(&["bounds", "12"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("upper: 22"), "{text}");
    assert!(text.contains("lower: 12"), "{text}");
}

#[test]
fn bounds_above_first_plane() {
    let v = json(&achromatic(&["bounds", "13", "--json"]));
    assert_eq!(v["upper"], 26);
    assert_eq!(v["lower"], 14);
    assert_eq!(v["lower_source"]["kind"], "prime_construction");
}

#[test]
fn bounds_below_domain_is_usage_error() {
    assert_eq!(code(&achromatic(&["bounds", "1"])), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&achromatic(&["frobnicate"])), 1);
    assert_eq!(code(&achromatic(&["search"])), 1);
    assert_eq!(code(&achromatic(&["search", "20"])), 1);
    assert_eq!(code(&achromatic(&["table", "7..3"])), 1);
    assert_eq!(
        code(&achromatic(&["search", "5", "--max-nodes", "lots"])),
        1
    );
    assert_eq!(code(&achromatic(&["--help"])), 0);
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for q in ["3", "5", "7", "11"] {
        let file = dir.path().join(format!("q{q}.json"));
        let out = achromatic(&["construct", "--q", q, "-o", path_str(&file)]);
        assert_eq!(code(&out), 0, "construct q={q}");
        let out = achromatic(&["verify", path_str(&file)]);
        assert_eq!(code(&out), 0, "verify q={q}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("valid\n"));
    }
    let doc: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("q3.json")).unwrap())
            .unwrap();
    assert_eq!(doc["n"], 13);
    assert_eq!(doc["k"], 14);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 14);
    assert_eq!(doc["meta"]["q"], 3);
}

#[test]
fn construct_dot_carries_class_attributes() {
    let out = achromatic(&["construct", "--q", "3", "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let classes: Vec<u32> = text
        .lines()
        .filter(|l| l.contains(" -- "))
        .map(|l| {
            let attr = l.split("[class=").nth(1).unwrap();
            attr.trim_end_matches("];").parse().unwrap()
        })
        .collect();
    assert_eq!(classes.len(), 78);
    let distinct: BTreeSet<u32> = classes.into_iter().collect();
    assert_eq!(distinct, (0..14).collect());
}

#[test]
fn construct_rejects_non_prime() {
    let out = achromatic(&["construct", "--q", "4"]);
    assert_ne!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd prime"));
}

#[test]
fn reproducible_output_is_byte_identical() {
    let a = achromatic(&["construct", "--q", "5", "--reproducible"]);
    let b = achromatic(&["construct", "--q", "5", "--reproducible"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("tool_version"));
    assert!(stdout(&achromatic(&["construct", "--q", "5"])).contains("tool_version"));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    };
    let good = write(
        "k4.json",
        r#"{"n":4,"k":3,"classes":[[[0,1],[2,3]],[[0,2],[1,3]],[[0,3],[1,2]]]}"#,
    );
    let twice = write(
        "twice.json",
        r#"{"n":4,"k":3,"classes":[[[0,1],[2,3]],[[0,2],[1,3],[0,1]],[[0,3],[1,2]]]}"#,
    );
    let forest_pair = write(
        "pair.json",
        r#"{"n":3,"k":3,"classes":[[[0,1]],[[0,2]],[[1,2]]]}"#,
    );
    let garbage = write("garbage.json", "not json");
    let wrong_k = write("wrong_k.json", r#"{"n":2,"k":2,"classes":[[[0,1]]]}"#);

    assert_eq!(code(&achromatic(&["verify", path_str(&good)])), 0);
    let out = achromatic(&["verify", path_str(&twice)]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("appears in class 0 and again in class 1"));
    let out = achromatic(&["verify", "--json", path_str(&forest_pair)]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["pair_failures"].as_array().unwrap().len(), 3);
    assert_eq!(code(&achromatic(&["verify", path_str(&garbage)])), 2);
    assert_eq!(code(&achromatic(&["verify", path_str(&wrong_k)])), 2);
    assert_eq!(code(&achromatic(&["verify", "/nonexistent/file.json"])), 2);
}

#[test]
fn search_small_values() {
    let out = achromatic(&["search", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("n = 5: Exact(4)"));

    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w6.json");
    let v = json(&achromatic(&[
        "search",
        "6",
        "--json",
        "-o",
        path_str(&witness),
    ]));
    assert_eq!(v["status"], "exact");
    assert_eq!(v["value"], 6);
    assert_eq!(code(&achromatic(&["verify", path_str(&witness)])), 0);
}

#[test]
fn search_with_small_budget_brackets() {
    let v = json(&achromatic(&[
        "search",
        "8",
        "--max-nodes",
        "1e4",
        "--json",
    ]));
    assert_eq!(v["status"], "bracket");
    assert_eq!(v["lower"], 8);
    assert_eq!(v["upper"], 11);
}

#[test]
fn search_with_time_limit_reports_timeout() {
    let v = json(&achromatic(&[
        "search",
        "9",
        "--max-seconds",
        "0.2",
        "--json",
    ]));
    assert_eq!(v["status"], "timed_out");
    assert_eq!(v["lower"], 9);
}

#[test]
fn table_rows() {
    let rows = json(&achromatic(&["table", "2..7", "--json"]));
    let exact: Vec<u64> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["exact"].as_u64().unwrap())
        .collect();
    assert_eq!(exact, [1, 2, 3, 4, 6, 7]);

    let rows = json(&achromatic(&["table", "8..12", "--json"]));
    let pairs: Vec<(u64, u64)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["lower"].as_u64().unwrap(), r["upper"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, [(8, 11), (9, 13), (10, 15), (11, 18), (12, 22)]);

    let text = stdout(&achromatic(&["table", "13..13"]));
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["13", "14", "26", "-"]);
}
