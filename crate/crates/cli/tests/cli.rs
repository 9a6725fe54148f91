use std::process::{Command, Output};

use quartic::config::{generate_example, parse_config};
use quartic_core::ratcore::int;

fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("quartic-{}-{}", std::process::id(), name));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn spectrum_lists_example_levels() {
    let o = quartic(&["spectrum", "--l", "1", "--p-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,E,u,dim,lattice_positive,interval_positive"));
    let rows: Vec<&str> = lines.collect();
    for row in ["0,5/2,1/8,1,true,true", "1,9/2,-3/8,2,true,true", "2,13/2,-7/8,3,true,true"] {
        assert!(rows.contains(&row), "missing {} in {:?}", row, rows);
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("p = 1: every zero of"));
}

#[test]
fn verify_passes_on_example() {
    let o = quartic(&["verify", "--l", "1", "--p-max", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert!(rows.iter().any(|r| r["check"] == "identity 29" && r["p"] == 2));
}

#[test]
fn failing_tolerance_gives_exit_one() {
    let o = quartic(&["verify", "--l", "1", "--p-max", "2", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn casimir_delta_only() {
    let cfg = temp_file("delta.json", r#"{"mode":"quantum","delta":["3"]}"#);
    let o = quartic(&["casimir", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "c5,-3,"));

    let cfg = temp_file("classical.json", r#"{"mode":"classical","delta":["3"],"tau":"1/2"}"#);
    let o = quartic(&["casimir", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "c1,-1/2,true"));
}

#[test]
fn bad_input_gives_exit_two() {
    let cfg = temp_file("float.json", r#"{"delta":[0.5]}"#);
    let o = quartic(&["casimir", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(quartic(&["spectrum", "--config", "/nonexistent/config.json"]).status.code(), Some(2));
    assert_eq!(quartic(&["example", "--l", "-1"]).status.code(), Some(2));
}

#[test]
fn example_round_trips_through_a_file() {
    let out = std::env::temp_dir().join(format!("quartic-{}-example.json", std::process::id()));
    let o = quartic(&["example", "--l", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(parse_config(&text).unwrap(), generate_example(&int(2)).unwrap());

    let o = quartic(&["phi", "--config", out.to_str().unwrap(), "--energy", "11/2", "--u", "-1/8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "1,630,630,true"));
}

#[test]
fn schrodinger_matches_algebraic_levels() {
    let o = quartic(&["schrodinger", "--l", "1", "--p-max", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("energy,multiplicity,error_estimate"));
    assert!(String::from_utf8_lossy(&o.stderr).matches(": pass").count() == 3);
}
