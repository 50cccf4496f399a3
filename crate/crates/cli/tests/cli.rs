use std::process::{Command, Output};

fn chvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chvol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bound_json_n2() {
    let o = chvol(&["bound", "-n", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = v["C"].as_f64().unwrap();
    assert!((c / 2.918e-9 - 1.0).abs() < 1e-3, "{c}");
    assert_eq!(v["d0"], 8);
    assert_eq!(v["k0"], 23.25);
    assert_eq!(v["radius_source"], "printed");
}

#[test]
fn invalid_dimension_exits_2() {
    let o = chvol(&["bound", "-n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(chvol(&["--digits", "20", "bound", "-n", "1"]).status.code(), Some(2));
    assert_eq!(chvol(&["bound", "-n", "1", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(chvol(&["euler-bound", "-n", "1", "--chi", "1"]).status.code(), Some(2));
    assert_eq!(chvol(&["distance", "--z", "0,0,1", "--w", "2,0,1"]).status.code(), Some(2));
}

#[test]
fn verify_small_run_passes() {
    let o = chvol(&["verify", "-n", "1", "--trials", "10", "--samples", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("overall: PASS"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "-n", "2", "--trials", "20", "--samples", "10", "--format", "json"];
    assert_eq!(chvol(&args).stdout, chvol(&args).stdout);
}

#[test]
fn distance_to_origin() {
    let o = chvol(&["distance", "--z", "0,0,1", "--w", "0.5,0,1", "--digits", "12"]);
    assert!(o.status.success());
    let d: f64 = stdout(&o).trim().parse().unwrap();
    assert!((d - 2.0 * 0.5f64.atanh()).abs() < 1e-11);
}

#[test]
fn table_csv_rows() {
    let o = chvol(&["table", "--from", "1", "--to", "3", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("n,d0,k0,C1,C2,R_G,r0,L,"));
    assert!(lines[1].starts_with("1,3,14.25,"));
    assert!(lines[2].ends_with(",2.91804e-9"));
}

#[test]
fn euler_bound_plain_is_integer() {
    let o = chvol(&["euler-bound", "-n", "1", "--chi", "-2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "7494");
}
