use std::process::{Command as Proc, Output};

use ellgenus_cli::{execute, render, Command, Format, ReportBundle, Settings};

fn ellgenus(args: &[&str]) -> Output {
    Proc::new(env!("CARGO_BIN_EXE_ellgenus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const Y1: [&str; 6] = ["--type", "F4", "--cross", "2", "--weight", "0,1,1,0"];

fn with(base: &[&str], extra: &[&str]) -> Vec<String> {
    base.iter().chain(extra).map(|s| s.to_string()).collect()
}

fn run(args: Vec<String>) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    ellgenus(&refs)
}

#[test]
fn chern_table_has_the_anchor_row() {
    let o = run(with(&["chern-table"], &Y1));
    assert!(o.status.success());
    assert!(stdout(&o).contains("| c17 | -12566964323536824 |"));
}

#[test]
fn chern_table_csv_has_66_rows_and_a_header() {
    let o = run(with(&["chern-table", "--format", "csv"], &Y1));
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 67);
    assert_eq!(lines[0], "monomial,value");
    assert_eq!(lines[1], "c17,-12566964323536824");
}

#[test]
fn usage_errors_exit_2() {
    let o = ellgenus(&["chern-table", "--type", "F4", "--cross", "9", "--weight", "0,1,1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("node out of range"));
    for args in [
        &["chern-table", "--cross", "2", "--weight", "0,1,1,0"][..],
        &["chern-table", "--type", "F4", "--cross", "2", "--weight", "0,1,1"],
        &["chern-table", "--type", "Q4", "--cross", "2", "--weight", "0,1,1,0"],
        &["genus", "--type", "G2", "--cross", "1", "--weight", "1,1", "--q-order", "11"],
        &["degrees", "--bogus"],
        &["roots", "--type", "F4", "--format", "xml"],
    ] {
        assert_eq!(ellgenus(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn genus_outside_calabi_yau_is_a_math_failure() {
    let o = ellgenus(&["genus", "--type", "G2", "--cross", "1", "--weight", "1,0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn degrees_of_y2() {
    let o = ellgenus(&["degrees", "--type", "F4", "--cross", "3", "--weight", "0,1,1,0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("2^7 · 3^2 · 5 · 7^18 · 13^3 · 17"), "{text}");
    assert!(text.contains("c_17 = -12566964323536824"));
}

#[test]
fn g2_genus_is_a_one_vector() {
    for cross in ["1", "2"] {
        let o = ellgenus(&["genus", "--type", "G2", "--cross", cross, "--weight", "1,1", "--format", "json"]);
        assert!(o.status.success());
        let b: ReportBundle = serde_json::from_str(&stdout(&o)).unwrap();
        let v = &b.varieties[0];
        let g = v.genus.as_ref().unwrap();
        assert_eq!(g.basis, vec!["phi_0_3/2".to_string()]);
        let euler: i64 = v.euler.as_ref().unwrap().parse().unwrap();
        assert_eq!(g.vector, vec![(euler / 2).to_string()]);
        assert_eq!(g.euler_specialization, euler.to_string());
    }
}

#[test]
fn same_job_gives_identical_bytes() {
    let args = with(&["chern-table", "--seed", "3", "--format", "json"], &Y1);
    let a = run(args.clone());
    let b = run(args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_changes_nothing_but_the_seed() {
    let json = |seed: &str| {
        let o = run(with(&["degrees", "--format", "json", "--seed", seed], &Y1));
        let mut b: ReportBundle = serde_json::from_str(&stdout(&o)).unwrap();
        b.job.seed = 0;
        b
    };
    assert_eq!(json("0"), json("12345"));
    let md = |seed: &str| stdout(&run(with(&["chern-table", "--seed", seed], &Y1)));
    assert_eq!(md("1"), md("2"));
}

#[test]
fn thread_count_does_not_change_output() {
    let a = run(with(&["chern-table", "--threads", "1"], &Y1));
    let b = run(with(&["chern-table", "--threads", "3"], &Y1));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_round_trips_to_the_in_memory_bundle() {
    let settings = Settings {
        dynkin: Some("F4".into()),
        cross: Some(vec![3]),
        weight: Some(vec![0, 1, 1, 0]),
        ..Settings::default()
    };
    let job = settings.resolve().unwrap();
    let b = execute(Command::ChernTable, &job, false).unwrap();
    let text = render(&b, Format::Json).unwrap();
    let back: ReportBundle = serde_json::from_str(&text).unwrap();
    assert_eq!(back, b);
    let o = ellgenus(&["chern-table", "--format", "json", "--type", "F4", "--cross", "3", "--weight", "0,1,1,0"]);
    assert_eq!(stdout(&o), text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["varieties"][0]["chern_table"][0]["value"].is_string());
}

#[test]
fn job_file_with_flag_override() {
    let path = std::env::temp_dir().join(format!("ellgenus-job-{}.txt", std::process::id()));
    std::fs::write(&path, "# Y1\ntype = F4\ncross = 2\nweight = 0,1,1,0\nseed = 7\nformat = csv\n").unwrap();
    let p = path.to_str().unwrap();
    let from_file = ellgenus(&["chern-table", "--job", p]);
    let flags = run(with(&["chern-table", "--format", "csv"], &Y1));
    assert_eq!(from_file.stdout, flags.stdout);
    let y2 = ellgenus(&["degrees", "--job", p, "--cross", "3", "--format", "md"]);
    assert!(stdout(&y2).contains("7^18"));
    std::fs::write(&path, "kind = F4\n").unwrap();
    assert_eq!(ellgenus(&["roots", "--job", p]).status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn job_text_parsing() {
    let s = Settings::from_job_text("type = G2\ncross = 1, 2\nq-order = 2 # comment\n").unwrap();
    assert_eq!(s.dynkin.as_deref(), Some("G2"));
    assert_eq!(s.cross, Some(vec![1, 2]));
    assert_eq!(s.q_order, Some(2));
    assert!(Settings::from_job_text("type F4").is_err());
}

#[test]
fn roots_and_cosets() {
    let o = ellgenus(&["roots", "--type", "F4", "--format", "json"]);
    let b: ReportBundle = serde_json::from_str(&stdout(&o)).unwrap();
    let r = b.root_system.unwrap();
    assert_eq!((r.rank, r.dimension, r.positive_roots.len()), (4, 52, 24));
    let o = ellgenus(&["cosets", "--type", "F4", "--cross", "2", "--format", "json"]);
    let b: ReportBundle = serde_json::from_str(&stdout(&o)).unwrap();
    let c = b.cosets.unwrap();
    assert_eq!(c.dim, 20);
    assert_eq!(c.num_cosets * c.levi_weyl_order, 1152);
}

#[test]
fn verify_passes_and_is_seed_independent() {
    let json = |seed: &str| {
        let o = ellgenus(&["verify", "--seed", seed, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let mut b: ReportBundle = serde_json::from_str(&stdout(&o)).unwrap();
        b.job.seed = 0;
        b
    };
    let a = json("0");
    assert!(a.checks.len() >= 10 && a.checks.iter().all(|c| c.passed));
    assert_eq!(a.criteria.len(), 8);
    assert_eq!(a, json("1"));
    let md = stdout(&ellgenus(&["verify"]));
    assert_eq!(md.matches("| PASS |").count(), a.checks.len());
    assert_eq!(md.lines().filter(|l| l.starts_with("PASS criterion")).count(), 8);
}
