use std::process::{Command, Output};

use serde_json::Value;

fn tcalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcalg")).args(args).output().expect("binary runs")
}

fn tcalg_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcalg")).args(args).env(key, value).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--emit", "json"]);
    let o = tcalg(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

const P3: [&str; 8] = ["--d", "3", "--m", "2", "--n", "1", "--r", "2"];

#[test]
fn bounds_text_lines() {
    for (d, line) in [("3", "lower=3 upper=3 exact=true"), ("2", "lower=2 upper=2 exact=true"), ("4", "lower=2 upper=3 exact=false")] {
        let o = tcalg(&["bounds", "--d", d, "--m", "2", "--n", "1", "--r", "2"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).lines().any(|l| l == line), "d={d}: {}", stdout(&o));
    }
}

#[test]
fn bounds_json_fields() {
    let mut args = vec!["bounds"];
    args.extend(P3);
    let v = json(&args);
    assert_eq!(v["command"], "bounds");
    assert_eq!(v["params"]["d"], 3);
    assert_eq!(v["lower"], 3);
    assert_eq!(v["upper"], 3);
    assert_eq!(v["exact"], true);
    assert_eq!(v["regime"], "odd-d");
    assert_eq!(v["exact_arithmetic"], true);
    assert_eq!(v["certificate"]["witness"], "w(1,2)*w[1](1,3)*w[2](2,3)");
    assert_eq!(v["certificate"]["factors"].as_array().unwrap().len(), 3);
    assert_eq!(v["certificate"]["coefficient"], "2");
}

#[test]
fn json_output_is_deterministic() {
    let mut args = vec!["bounds", "--emit", "json"];
    args.extend(["--d", "5", "--m", "3", "--n", "2", "--r", "3"]);
    let a = tcalg(&args);
    let b = tcalg(&args);
    assert_eq!(a.stdout, b.stdout);
    let sweep = ["verify", "--d-set", "2,3", "--m-max", "3", "--n-max", "2", "--r-max", "3", "--emit", "json"];
    assert_eq!(tcalg(&sweep).stdout, tcalg(&sweep).stdout);
}

#[test]
fn envelope_replays() {
    let v = json(&["poincare", "--d", "2", "--m", "2", "--n", "1", "--r", "1"]);
    let a = &v["arguments"];
    let replay = json(&[
        "poincare",
        "--d", &a["d"].to_string(),
        "--m", &a["m"].to_string(),
        "--n", &a["n"].to_string(),
        "--r", &a["r"].to_string(),
    ]);
    assert_eq!(v, replay);
}

#[test]
fn invalid_params_exit_2() {
    let o = tcalg(&["bounds", "--d", "1", "--m", "2", "--n", "1", "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tcalg(&["bounds", "--d", "3", "--m", "1", "--n", "1", "--r", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_defaults_pass() {
    let o = tcalg(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("r-monotonicity: ok"));
    assert!(text.contains("failures: 0 passed: true"));

    let v = json(&["verify"]);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 4 * 3 * 3 * 3);
    for c in cells {
        let d = c["params"]["d"].as_u64().unwrap();
        assert_eq!(c["exact"], d != 4, "{c}");
        assert_eq!(c["ok"], true);
    }
    let keys: Vec<(u64, u64, u64, u64)> = cells
        .iter()
        .map(|c| {
            let p = &c["params"];
            (p["d"].as_u64().unwrap(), p["m"].as_u64().unwrap(), p["n"].as_u64().unwrap(), p["r"].as_u64().unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_errors() {
    assert_eq!(tcalg(&["verify", "--m-max", "1"]).status.code(), Some(2));
    assert_eq!(tcalg_env(&["verify"], "TCALG_MAX_CELLS", "10").status.code(), Some(4));
    assert_eq!(tcalg_env(&["verify"], "TCALG_MAX_CELLS", "lots").status.code(), Some(2));
    assert_eq!(tcalg_env(&["verify", "--d-set", "3", "--m-max", "2", "--n-max", "1", "--r-max", "2"], "TCALG_MAX_CELLS", "1").status.code(), Some(0));
}

#[test]
fn normal_form_examples() {
    let o = tcalg(&["normal-form", "w(1,3)*w(2,3)", "--d", "3", "--m", "3", "--n", "1", "--r", "2"]);
    assert_eq!(stdout(&o).trim(), "w(1,2)*w(2,3) - w(1,2)*w(1,3)");
    let mut args = vec!["normal-form", "w[1](1,3)^2"];
    args.extend(P3);
    assert_eq!(stdout(&tcalg(&args)).trim(), "0");

    let mut args = vec!["normal-form", "w(1,2)*(w[1](1,3)"];
    args.extend(P3);
    let o = tcalg(&args);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 17"));
}

#[test]
fn normal_form_word_cap_exit_4() {
    let mut args = vec!["normal-form", "w(1,2)*w[1](1,3)*w[2](1,3)", "--max-word-len", "2"];
    args.extend(P3);
    assert_eq!(tcalg(&args).status.code(), Some(4));
}

#[test]
fn normal_form_json_terms() {
    let mut args = vec!["normal-form", "-2*w[1](1,3)*w(1,2)"];
    args.extend(P3);
    let v = json(&args);
    let terms = v["polynomial"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["coefficient"], "-2");
    assert_eq!(terms[0]["monomial"], "w(1,2)*w[1](1,3)");
    assert_eq!(v["arguments"]["expr"], "-2*w[1](1,3)*w(1,2)");
}

#[test]
fn poincare_examples() {
    let mut args = vec!["poincare"];
    args.extend(P3);
    assert_eq!(stdout(&tcalg(&args)).trim(), "1 + 5t^2 + 8t^4 + 4t^6");
    let o = tcalg(&["poincare", "--d", "2", "--m", "2", "--n", "1", "--r", "1"]);
    assert_eq!(stdout(&o).trim(), "1 + 3t + 2t^2");
    args.push("--check");
    let o = tcalg(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("enumeration check: pass"));
}

#[test]
fn genfun_examples() {
    let o = stdout(&tcalg(&["genfun", "--bundle", "hopf"]));
    assert!(o.contains("F(t) = t/(1-t)^2"));
    assert!(o.contains("residues: A = 1, B = -1"));

    let v = json(&["genfun", "--bundle", "fn-odd", "--m", "3", "--n", "2", "--terms", "4"]);
    assert_eq!(v["pole_form"]["text"], "2/(1-t)^2 + 2/(1-t) - 4");
    assert_eq!(v["terms"], serde_json::json!(["0", "6", "8", "10"]));
    assert_eq!(v["recurrence_a"], "2");

    let o = stdout(&tcalg(&["genfun", "--bundle", "fn-fiber", "--n", "2"]));
    assert!(o.contains("pole form: 2/(1-t)^2 - 2"), "{o}");
}

#[test]
fn oracle_matches_certificate_on_small_case() {
    let mut args = vec!["oracle"];
    args.extend(P3);
    let v = json(&args);
    assert_eq!(v["k"], 3);
    assert_eq!(v["truncated"], false);
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(tcalg(&["frobnicate"]).status.code(), Some(2));
}
