use std::io::Write;
use std::process::{Command, Output};

fn pareto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pareto"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = pareto(&full);
    let value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json from {args:?}: {e}\n{}",
            String::from_utf8_lossy(&o.stderr)
        )
    });
    (o.status.code().unwrap(), value)
}

#[test]
fn eval_prints_choice_set() {
    let cases = [
        ("pareto", "xyzw|ywxz|zwxy", "x y z w"),
        ("tops", "xyz|xyz", "x"),
        ("example:8", "xywzt|ztwxy", "x z"),
        ("borda", "xyz|yxz|xzy", "x"),
    ];
    for (rule, profile, expected) in cases {
        let o = pareto(&["eval", "--rule", rule, "--profile", profile]);
        assert!(o.status.success(), "{rule} {profile}");
        assert_eq!(stdout(&o).trim(), expected, "{rule} {profile}");
    }
}

#[test]
fn eval_json_record() {
    let (code, v) = json(&["eval", "--rule", "tops", "--profile", "abc|cab"]);
    assert_eq!(code, 0);
    assert_eq!(v["choice"], serde_json::json!(["a", "c"]));
    assert_eq!(v["profile"], "abc|cab");
}

#[test]
fn check_reports_witness_and_exit_code() {
    let o = pareto(&[
        "check",
        "--rule",
        "example:10",
        "--axiom",
        "balancedness",
        "--m",
        "3",
        "--n",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("✗ balancedness"), "{text}");
    assert!(text.contains("bca|acb|acb"), "{text}");

    let o = pareto(&[
        "check",
        "--rule",
        "pareto",
        "--axiom",
        "strong-stability",
        "--m",
        "4",
        "--n",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("✓ strong-stability"));
}

#[test]
fn json_witness_profiles_reparse() {
    let (code, v) = json(&["check", "--rule", "tops", "--m", "3", "--n", "3"]);
    assert_eq!(code, 1);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 8);
    let mut seen = 0;
    for r in reports {
        let Some(w) = r.get("witness").filter(|w| !w.is_null()) else {
            continue;
        };
        for p in w["profiles"].as_array().unwrap() {
            let p = p.as_str().unwrap();
            let o = pareto(&["eval", "--rule", "tops", "--profile", p]);
            assert!(o.status.success(), "{p} does not re-parse");
            seen += 1;
        }
    }
    assert!(seen >= 2);
}

#[test]
fn matrix_finds_failures() {
    let o = pareto(&[
        "matrix",
        "--rules",
        "pareto,borda",
        "--axioms",
        "pareto,tops-in",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("[1] borda tops-in"), "{text}");

    let o = pareto(&[
        "matrix",
        "--rules",
        "pareto,tops",
        "--axioms",
        "pareto,tops-in,monotonicity",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn example_reproduces() {
    let o = pareto(&["example", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains('✗'));

    let (code, v) = json(&["example", "11"]);
    assert_eq!(code, 0);
    assert_eq!(v["example"], 11);
}

#[test]
fn theorem_verdicts() {
    let (code, v) = json(&["theorem", "2", "--rule", "pareto", "--m", "3", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "consistent-equal");

    let (code, v) = json(&["theorem", "3", "--rule", "example:5"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "consistent-counterexample");
    assert!(v["failing_axioms"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!("monotonicity")));
}

#[test]
fn search_finds_the_balanced_deviation() {
    let (code, v) = json(&[
        "search",
        "--m",
        "4",
        "--n",
        "3",
        "--axioms",
        "pareto,tops-in,balancedness",
        "--mode",
        "single",
        "--budget",
        "100",
    ]);
    assert_eq!(code, 0);
    let devs = v["deviations"].as_array().unwrap();
    assert!(!devs.is_empty());
    let hit = devs.iter().any(|d| {
        d["profiles"] == serde_json::json!(["xyzw|ywxz|zwxy"])
            && d["choice_sets"] == serde_json::json!([["x", "y", "z"]])
    });
    assert!(hit, "{v}");

    let (code, v) = json(&[
        "search",
        "--m",
        "3",
        "--n",
        "2",
        "--axioms",
        "pareto,tops-in,balancedness",
    ]);
    assert_eq!(code, 0);
    assert!(v["deviations"].as_array().unwrap().is_empty());
    assert_eq!(v["exhausted"], true);
}

#[test]
fn errors_exit_two() {
    let o = pareto(&["eval", "--rule", "pareto", "--profile", "xyq|yzx"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));

    let o = pareto(&["check", "--rule", "pareto", "--axiom", "fairness"]);
    assert_eq!(o.status.code(), Some(2));

    let o = pareto(&[
        "search", "--m", "3", "--n", "2", "--axioms", "pareto", "--budget", "0",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = pareto(&["check", "--rule", "pareto", "--m", "8", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_file_rule() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{ "m": 3, "n": 3, "default": "pareto", "overrides": {{ "xyz|yzx|zxy": ["x"] }} }}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();

    let o = pareto(&["eval", "--table", path, "--profile", "xyz|yzx|zxy"]);
    assert_eq!(stdout(&o).trim(), "x");
    let o = pareto(&["eval", "--table", path, "--profile", "yzx|xyz|zxy"]);
    assert_eq!(stdout(&o).trim(), "x y z");

    let (code, v) = json(&["check", "--table", path, "--axioms", "pareto,anonymity"]);
    assert_eq!(code, 1);
    assert_eq!(v["reports"][0]["verdict"], "pass");
    assert_eq!(v["reports"][1]["verdict"], "fail");
}

#[test]
fn worker_count_does_not_change_output() {
    let runs: [&[&str]; 3] = [
        &["check", "--rule", "borda", "--m", "4", "--n", "2"],
        &["matrix", "--m", "3", "--n", "3"],
        &[
            "search",
            "--m",
            "4",
            "--n",
            "3",
            "--axioms",
            "pareto,tops-in,balancedness",
            "--mode",
            "orbit",
        ],
    ];
    for args in runs {
        let mut one = vec!["--format", "json", "--workers", "1"];
        one.extend_from_slice(args);
        let mut four = vec!["--format", "json", "--workers", "4"];
        four.extend_from_slice(args);
        assert_eq!(pareto(&one).stdout, pareto(&four).stdout, "{args:?}");
    }
}
