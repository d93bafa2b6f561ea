use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn crflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crflag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const B3: [&str; 8] = [
    "analyze",
    "--family",
    "B",
    "--rank",
    "3",
    "--parabolic",
    "1,3",
    "--cayley",
];

fn b3(format: &str) -> Output {
    let mut args = B3.to_vec();
    args.extend(["0,1,0|1,1,1", "--format", format]);
    crflag(&args)
}

#[test]
fn b3_json_matches_golden() {
    let out = b3("json");
    assert_eq!(out.status.code(), Some(0));
    let got: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let golden: Value = serde_json::from_str(include_str!("golden/b3_cayley.json")).unwrap();
    assert_eq!(got, golden);
    assert_eq!(got["order"], 3);
    assert_eq!(got["dim_Z"], 7);
    assert_eq!(got["cr_codim"], 1);
}

#[test]
fn b3_text_matches_golden() {
    let out = b3("text");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("golden/b3_cayley.txt"));
}

#[test]
fn text_and_json_agree_on_numbers() {
    let json: Value = serde_json::from_str(&stdout(&b3("json"))).unwrap();
    let text = stdout(&b3("text"));
    let fields: BTreeMap<&str, &str> = text
        .lines()
        .filter(|l| !l.starts_with(' '))
        .filter_map(|l| l.split_once(": "))
        .collect();
    let mut compared = 0;
    for (key, value) in json.as_object().unwrap() {
        if let Some(n) = value.as_u64() {
            assert_eq!(fields[key.as_str()], n.to_string(), "{key}");
            compared += 1;
        }
        if let Some(b) = value.as_bool() {
            assert_eq!(fields[key.as_str()], b.to_string(), "{key}");
        }
    }
    assert!(compared >= 7);
    let dims: Vec<String> = json["kernel_dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    assert_eq!(fields["kernel_dims"], dims.join(","));
    let levels = json["filtration"].as_array().unwrap();
    for (k, level) in levels.iter().enumerate() {
        let line = text
            .lines()
            .find(|l| l.trim_start().starts_with(&format!("q({k}):")))
            .unwrap();
        assert_eq!(
            line.matches(',').count() + 1,
            level.as_array().unwrap().len()
        );
    }
}

#[test]
fn split_is_totally_real() {
    let out = crflag(&[
        "analyze",
        "--family",
        "B",
        "--rank",
        "3",
        "--parabolic",
        "1,3",
        "--split",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["orbit_type"], "totally_real");
    assert!(v.get("order").is_none());
    assert!(v.get("filtration").is_none());
}

#[test]
fn su21_sphere_has_order_one() {
    let out = crflag(&[
        "analyze",
        "--family",
        "A",
        "--rank",
        "2",
        "--parabolic",
        "1",
        "--sigma-matrix",
        "0,1|1,0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 1);
    assert_eq!(v["oracle_checked"], true);
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["analyze", "--family", "Q", "--rank", "2", "--split"],
            "--family",
        ),
        (
            &[
                "analyze",
                "--family",
                "A",
                "--rank",
                "2",
                "--parabolic",
                "3",
                "--split",
            ],
            "--parabolic",
        ),
        (
            &[
                "analyze",
                "--family",
                "A",
                "--rank",
                "2",
                "--sigma-matrix",
                "2,0|0,2",
            ],
            "--sigma-matrix",
        ),
        (
            &[
                "analyze", "--family", "B", "--rank", "3", "--cayley", "100|110",
            ],
            "--cayley",
        ),
    ];
    for (args, flag) in cases {
        let out = crflag(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(flag), "{args:?}: {err}");
    }
    let both = crflag(&[
        "analyze", "--family", "A", "--rank", "2", "--split", "--cayley", "11",
    ]);
    assert_eq!(both.status.code(), Some(2));
    let none = crflag(&["analyze", "--family", "A", "--rank", "2"]);
    assert_eq!(none.status.code(), Some(2));
}

#[test]
fn example_so7_matches() {
    let out = crflag(&["example-so7"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("3-nondegenerate"));
    assert!(!s.contains("differs"));
}

#[test]
fn classical_hypersurface_survey() {
    let out = crflag(&[
        "survey",
        "--families",
        "A,B,C,D",
        "--max-rank",
        "4",
        "--max-cayley-chain",
        "3",
        "--hypersurface-only",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["max_order"], 3);
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows
        .iter()
        .all(|r| r["cr_codim"] == 1 && r["oracle_checked"] == true));
}

#[test]
fn g2_survey_respects_its_bound() {
    let out = crflag(&[
        "survey",
        "--families",
        "G",
        "--max-rank",
        "2",
        "--hypersurface-only",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["max_order"].as_u64().unwrap() <= 4);
}

#[test]
fn empty_family_list_is_a_usage_error() {
    let out = crflag(&["survey", "--families", ""]);
    assert_eq!(out.status.code(), Some(2));
    let out = crflag(&["survey", "--families", "A,X"]);
    assert_eq!(out.status.code(), Some(2));
}
