use std::process::{Command, Output};

use serde_json::Value;

fn dilogint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dilogint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = dilogint(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn li2_prints_seventeen_digits() {
    let o = dilogint(&["li2", "--x", "0.5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let v: f64 = text.trim().parse().unwrap();
    assert_eq!(v, 0.5822405264650125);
    let mantissa = text.trim().split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);

    let o = dilogint(&["li2", "--x", "-10"]);
    assert!(o.status.success());
    let o = dilogint(&["li2", "--x", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn region_reports_limits() {
    let v = json(&["region", "--xi", "0.25", "--lambda", "0", "--y", "0.25"]);
    assert_eq!(v["y_plus"], 0.5);
    assert_eq!(v["y_minus"], 0.0);
    let (zm, zp) = (
        v["z_minus"].as_f64().unwrap(),
        v["z_plus"].as_f64().unwrap(),
    );
    assert!(0.0 < zm && zm < zp && zp < 0.5);
    let bad = dilogint(&["region", "--xi", "1.2"]);
    assert!(!bad.status.success());
}

#[test]
fn quad_emits_json_result() {
    let v = json(&[
        "quad", "--xi", "0.25", "--lambda", "0", "--type", "2,1", "--f", "1", "--tol", "1e-9",
    ]);
    let value = v["value"].as_f64().unwrap();
    assert!((value - 1.876_530_350_527_416_3).abs() < 1e-9);
    assert!(v["error_estimate"].as_f64().unwrap() > 0.0);
    assert!(v["evaluations"].as_u64().unwrap() > 0);

    let r = json(&[
        "quad",
        "--xi",
        "0.25",
        "--lambda",
        "1e-3",
        "--type",
        "1,0",
        "--f",
        "2*y^1*z^0,-1*y^0*z^1",
        "--reduced",
    ]);
    assert!(r["value"].as_f64().unwrap().is_finite());
}

#[test]
fn eval_verify_reports_oracle_difference() {
    for cmd in ["eval-I", "eval-J2"] {
        let v = json(&[cmd, "--xi", "0.5", "--verify"]);
        for key in ["closed_form", "oracle", "abs_diff", "rel_diff"] {
            assert!(v[key].is_number(), "{cmd}: {key}");
        }
        assert!(v["rel_diff"].as_f64().unwrap() < 1e-9);
    }
    let v = json(&["eval-J1", "--xi", "0.25", "--lambda", "1e-6"]);
    assert_eq!(v["expansion"]["log_coeff"], -8.0);
    assert!(v.get("oracle").is_none());
    let v = json(&["eval-J", "--xi", "0.25", "--lambda", "1e-6", "--verify"]);
    assert!(v["abs_diff"].as_f64().unwrap() < 0.2);
    assert!(!dilogint(&["eval-J1", "--xi", "0.25"]).status.success());
}

#[test]
fn split_reports_parts() {
    let v = json(&[
        "split",
        "--which",
        "cut",
        "--xi",
        "0.25",
        "--epsilon",
        "1e-3",
    ]);
    assert!(v["residual_y_vs_k"].as_f64().unwrap().abs() < 1e-6);
    assert!(v["i_plus"].as_f64().unwrap() < 0.0 && v["i_minus"].as_f64().unwrap() > 0.0);
    let v = json(&["split", "--which", "soft", "--xi", "0.25"]);
    assert!((v["c1"].as_f64().unwrap() + 4.0 / 3.0).abs() < 1e-15);
    let v = json(&[
        "split",
        "--which",
        "collinear",
        "--xi",
        "0.25",
        "--lambda",
        "1e-8",
    ]);
    assert!((v["finite_part"].as_f64().unwrap() + 35.1556).abs() < 1e-4);
}

#[test]
fn verify_exit_status() {
    let o = dilogint(&["verify", "--suite", "dilog"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 5);
    assert!(text.contains("threshold"));

    // an impossible threshold must fail, with the report still printed
    let o = dilogint(&["verify", "--suite", "dilog", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL dilog/inversion"));

    assert!(dilogint(&["verify", "--suite", "all", "--seed", "3"])
        .status
        .success());
}

#[test]
fn table_csv_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let js = dir.path().join("t.json");
    for (fmt, path) in [("csv", &csv), ("json", &js)] {
        let o = dilogint(&[
            "table",
            "--integral",
            "I",
            "--xi-grid",
            "0.1,0.25,0.5",
            "--format",
            fmt,
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("integral,xi,lambda,closed,quad,quad_err,abs_diff,error")
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 3);

    let json: Value = serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    let json = json.as_array().unwrap();
    for (r, j) in rows.iter().zip(json) {
        for (i, key) in ["xi", "lambda", "closed", "quad", "quad_err", "abs_diff"]
            .iter()
            .enumerate()
        {
            let from_csv: f64 = r[i + 1].parse().unwrap();
            assert_eq!(from_csv, j[key].as_f64().unwrap(), "{key}");
        }
    }
}

#[test]
fn table_is_byte_identical_across_runs() {
    let args = [
        "table",
        "--integral",
        "J1",
        "--xi-grid",
        "0.25",
        "--lambda-grid",
        "1e-6,1e-4",
    ];
    let a = dilogint(&args);
    let b = dilogint(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);
}

#[test]
fn empty_grid_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never.csv");
    let cfg = dir.path().join("empty.toml");
    std::fs::write(&cfg, "[table]\nxi_grid = []\n").unwrap();
    let o = dilogint(&[
        "--config",
        cfg.to_str().unwrap(),
        "table",
        "--integral",
        "I",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty"));
    assert!(!out.exists());
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, "[table]\nxi_grid = [0.2, 0.4]\nlambda_grid = [0.0]\n").unwrap();
    let c = cfg.to_str().unwrap();
    let from_config = dilogint(&["--config", c, "table", "--integral", "I"]);
    assert_eq!(stdout(&from_config).lines().count(), 3);
    let from_flag = dilogint(&[
        "--config",
        c,
        "table",
        "--integral",
        "I",
        "--xi-grid",
        "0.3",
    ]);
    let text = stdout(&from_flag);
    assert_eq!(text.lines().count(), 2);
    let xi: f64 = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(xi, 0.3);
}

#[test]
fn generic_table_rows_carry_errors() {
    let o = dilogint(&[
        "table",
        "--integral",
        "generic",
        "--type",
        "2,1",
        "--f",
        "1*y^0*z^-2",
        "--xi-grid",
        "0.25",
        "--lambda-grid",
        "0,1e-4",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].contains("soft-divergent"));
    assert!(rows[1].ends_with(','));
}
