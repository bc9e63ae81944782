use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_debranges")).args(args).output().expect("spawn debranges")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn lowner_table_csv() {
    let out = stdout(&["table", "lowner", "--n", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,j,coefficient");
    assert_eq!(&lines[1..], ["1,1,1", "2,1,2", "2,2,-2", "3,1,3", "3,2,-8", "3,3,5"]);
    assert!(!out.contains('\r'));
}

#[test]
fn csv_and_json_carry_the_same_values() {
    for table in ["lowner", "lambda", "tau"] {
        let csv = stdout(&["table", table, "--n", "6"]);
        let json: serde_json::Value = serde_json::from_str(&stdout(&["table", table, "--n", "6", "--format", "json"])).unwrap();
        assert_eq!(json["table"], table);
        assert_eq!(json["n_max"], 6);
        let rows = json["rows"].as_array().unwrap();
        let csv_rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), csv_rows.len());
        for (row, line) in rows.iter().zip(csv_rows) {
            let mut fields = vec![row["n"].to_string()];
            if let Some(k) = row.get("k") {
                fields.push(k.to_string());
            }
            fields.push(row["j"].to_string());
            fields.push(row["coefficient"].as_str().unwrap().to_owned());
            assert_eq!(fields.join(","), line);
        }
    }
}

#[test]
fn float_table() {
    let out = stdout(&["table", "lambda", "--n", "2", "--float"]);
    assert!(out.lines().any(|l| l == "2,1,2,-4"));
    let out = stdout(&["eval", "lambda", "--n", "2", "--k", "1", "--t", "1"]);
    assert!(out.trim().parse::<f64>().is_ok(), "{out}");
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "tau", "--n", "2", "--k", "1", "--y", "1"]).trim(), "2");
    assert_eq!(stdout(&["eval", "tau", "--n", "2", "--k", "1", "--y", "0"]).trim(), "0");
    assert_eq!(stdout(&["eval", "lambda", "--n", "2", "--k", "1", "--y", "1/2"]).trim(), "1");
    let s = stdout(&["eval", "W-series", "--k", "1", "--n", "3", "--y", "1/2"]);
    assert_eq!(s.lines().collect::<Vec<_>>(), ["z^2: 1/2", "z^3: 1", "z^4: 7/8"]);
}

#[test]
fn eval_rejects_both_or_neither_time() {
    assert_eq!(run(&["eval", "tau", "--n", "2", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "tau", "--n", "2", "--k", "1", "--y", "1", "--t", "0"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "theorem2", "--n", "20"]);
    assert_eq!(out.lines().last(), Some("PASS"));
    let out = stdout(&["verify", "lowner", "--n", "40"]);
    assert_eq!(out.lines().last(), Some("PASS"));
    let out = stdout(&["verify", "positivity", "--n", "15"]);
    assert_eq!(out.lines().last(), Some("PASS"));
}

#[test]
fn verify_json_schema() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["verify", "gosper", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(v["suite"], "gosper");
    assert_eq!(v["n_max"], 4);
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["id"].is_string());
        assert!(c["indices"].as_array().unwrap().iter().all(|i| i.is_i64()));
        assert_eq!(c["pass"], true);
        assert!(c["witness"].is_null());
    }
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nope"));
}

#[test]
fn gosper_examples() {
    let out = stdout(&["gosper", "l", "--range", "1..20"]);
    assert!(out.contains("R(l) = (l + 1) / 2"), "{out}");
    assert!(out.contains("sum(l=1..20) = 210"), "{out}");
    let out = stdout(&["gosper", "(8-l)*binom(l+2,l-3)", "--var", "l", "--range", "3..7"]);
    assert!(out.contains("R(l) = (6*l^2 - 35*l - 159) / (42*l - 336)"), "{out}");
    assert!(out.contains("sum(l=3..7) = 330"), "{out}");
}

#[test]
fn gosper_not_summable_exits_zero() {
    for term in ["fact(l)", "1/fact(l)"] {
        assert_eq!(stdout(&["gosper", term, "--var", "l"]).trim(), "NOT GOSPER-SUMMABLE");
    }
}

#[test]
fn gosper_other_variable() {
    let out = stdout(&["gosper", "m", "--var", "m", "--range", "1..4"]);
    assert!(out.contains("R(m) = (m + 1) / 2"), "{out}");
    assert!(out.contains("sum(m=1..4) = 10"), "{out}");
}

#[test]
fn gosper_parse_error_reports_column() {
    let out = run(&["gosper", "fact("]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 6"), "{err}");
    assert!(err.lines().any(|l| l.trim() == "^"), "{err}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "tau", "--n", "8", "--format", "json"][..],
        &["verify", "hypergeometric", "--n", "8", "--format", "json"],
        &["eval", "B-series", "--k", "2", "--n", "6", "--y", "3/7"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}
