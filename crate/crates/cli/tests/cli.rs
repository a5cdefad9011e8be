//! The `cfweno` binary: subcommands, config merging and exit codes.

use std::fs;
use std::process::{Command, Output};

fn cfweno(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfweno")).args(args).env_remove("CFWENO_THREADS").output().unwrap()
}

fn report(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn run_prints_a_json_report() {
    let r = report(&cfweno(&["run", "--case", "sod", "--grid", "50", "--scheme", "fweno", "--order", "3"]));
    assert_eq!(r["case"], "sod");
    assert_eq!(r["scheme"], "fweno");
    assert_eq!(r["order"], 3);
    assert_eq!(r["grid"][0], 50);
    assert!(r["errors"]["l1"].as_f64().unwrap() < 0.02);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "# square wave\ncase = square-wave\ngrid = 40\ncfl = 1\ntend = 0.4\norder = 7\n").unwrap();
    let path = cfg.to_str().unwrap();
    let r = report(&cfweno(&["run", "--config", path]));
    assert_eq!(
        (r["case"].as_str(), r["order"].as_u64(), r["grid"][0].as_u64()),
        (Some("square-wave"), Some(7), Some(40))
    );
    assert_eq!(r["cfl"], 1.0);
    let r = report(&cfweno(&["run", "--config", path, "--grid", "60", "--cfl", "0.5"]));
    assert_eq!((r["grid"][0].as_u64(), r["cfl"].as_f64()), (Some(60), Some(0.5)));
}

#[test]
fn out_directory_receives_data_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("results");
    let o = cfweno(&["run", "--case", "linear-sine", "--grid", "20", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let mut names: Vec<String> =
        fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 2);
    assert!(names[0].ends_with(".csv") && names[1].ends_with(".json"), "{names:?}");
}

#[test]
fn convergence_prints_one_row_per_grid() {
    let o = cfweno(&["convergence", "--case", "linear-sine", "--grid", "10", "--levels", "3", "--order", "3"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].trim_start().starts_with("10 ") && rows[2].trim_start().starts_with("40 "));
}

#[test]
fn bench_times_every_scheme() {
    let o = cfweno(&["bench", "--case", "sod", "--grid", "40", "--repeats", "1", "--threads", "1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    for s in ["cfweno", "fweno", "weno-rk3"] {
        assert!(text.lines().any(|l| l.split_whitespace().next() == Some(s)), "{text}");
    }
}

#[test]
fn derive_coefficients_reproduces_the_frozen_tables() {
    let o = cfweno(&["derive-coefficients", "--format", "rust"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap(), include_str!("../../core/src/stencil/tables.rs"));
    let o = cfweno(&["derive-coefficients", "--order", "3"]);
    assert!(o.status.success() && !o.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(cfweno(&["run", "--case", "no-such-case"]).status.code(), Some(3));
    assert_eq!(cfweno(&["run", "--cfl", "1.5"]).status.code(), Some(3));
    assert_eq!(cfweno(&["run", "--order", "4"]).status.code(), Some(3));
    assert_eq!(cfweno(&["run", "--bogus"]).status.code(), Some(3));
    assert_eq!(cfweno(&["run", "--config", "/nonexistent/cfweno.cfg"]).status.code(), Some(3));
    assert_eq!(cfweno(&["--help"]).status.code(), Some(0));
}

#[test]
fn thread_count_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cfweno"))
        .args(["run", "--case", "sod", "--grid", "30"])
        .env("CFWENO_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_cfweno"))
        .args(["run", "--case", "sod", "--grid", "30"])
        .env("CFWENO_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
}
