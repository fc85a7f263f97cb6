use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fixed-hooks")).args(args).output().expect("spawn fixed-hooks")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

#[test]
fn verify_single_case_shows_the_example_coefficient() {
    let o = run(&["verify", "--thm", "T11", "--m", "3", "--order", "12"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("pass    T11 m=3 N=12\n"), "{out}");
    let row = out.lines().find(|l| l.trim_start().starts_with("q^10 ")).unwrap();
    assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["q^10", "series", "10", "oracle", "10"]);
}

#[test]
fn full_grid_fails_only_where_the_weight_shift_needs_h_zero() {
    let o = run(&["verify", "--all", "--order", "25"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let failing: Vec<&str> = out.lines().filter(|l| l.starts_with("fail")).collect();
    assert!(!failing.is_empty());
    for l in &failing {
        assert!(l.starts_with("fail    T13 ") && !l.contains(" h=0 "), "{l}");
    }
    assert!(!out.lines().any(|l| l.starts_with("skipped")));
}

#[test]
fn distinct_by_size_reports_both_readings() {
    let o = run(&["verify", "--thm", "DistinctBySize", "--variant", "both", "--order", "20", "--m", "1..2", "--k", "1..4"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("fail    DistinctBySize ")));
    assert!(!out.lines().any(|l| l.starts_with("fail    DistinctBySizeB ")));
    let note = out.lines().find(|l| l.starts_with("variant resolution: DistinctBySize:")).unwrap();
    assert!(note.ends_with("matching: rederived"), "{note}");
}

#[test]
fn verify_output_is_deterministic_across_thread_counts() {
    let args = |jobs: &'static str| ["verify", "--thm", "MFixedByHook,OddByHook", "--order", "15", "--format", "csv", "--jobs", jobs];
    let a = run(&args("1"));
    let b = run(&args("4"));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_lines_have_stable_fields() {
    let o = run(&["verify", "--thm", "T11", "--m", "2", "--order", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    for (n, v) in lines.iter().enumerate() {
        for key in ["theorem", "m", "k", "h", "n", "coefficient", "oracle", "status"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["n"], n as i64);
        assert_eq!(v["status"], "pass");
    }
}

#[test]
fn verify_usage_errors_exit_two() {
    assert_eq!(code(&run(&["verify"])), 2);
    assert_eq!(code(&run(&["verify", "--all", "--thm", "T11"])), 2);
    assert_eq!(code(&run(&["verify", "--thm", "T99"])), 2);
    assert_eq!(code(&run(&["verify", "--thm", "T11", "--format", "xml"])), 2);
}

#[test]
fn precondition_violations_are_skipped_with_reasons() {
    let o = run(&["verify", "--thm", "MFixedByPart", "--m", "3", "--k", "2", "--h", "0", "--order", "10"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("skipped MFixedByPart m=3 k=2 h=0 N=10  (part size k = 2 must be at least m = 3)"), "{out}");
    let s = run(&["series", "--thm", "MFixedByPart", "--m", "3", "--k", "2", "--h", "0"]);
    assert_eq!(code(&s), 2);
    assert!(String::from_utf8_lossy(&s.stderr).contains("at least m"));
}

#[test]
fn series_of_single_cells_in_first_column() {
    let o = run(&["series", "--thm", "T14", "--m", "1", "--k", "1", "--order", "10"]);
    assert_eq!(code(&o), 0);
    let coeffs: Vec<i64> = stdout(&o).lines().map(|l| l.split(' ').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(coeffs, [0, 1, 1, 2, 3, 5, 7, 11, 15, 22]);
}

#[test]
fn series_of_first_column_closed_form_matches_counts() {
    let s = stdout(&run(&["series", "--thm", "T11", "--m", "1", "--order", "5"]));
    let c = stdout(&run(&["count", "fixed-by-hook", "--n", "0..4", "--m", "1", "--h", "0", "--sum-k"]));
    assert_eq!(s, c);
}

#[test]
fn series_with_order_zero_is_empty() {
    let o = run(&["series", "--thm", "T11", "--m", "1", "--order", "0"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
}

#[test]
fn count_examples() {
    let o = run(&["count", "fixed-by-hook", "--n", "10", "--m", "3", "--h", "0", "--sum-k", "--list"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "10");
    assert_eq!(lines.len(), 11);
    assert!(lines[1].starts_with("(6, 4)") && lines[2].starts_with("(5, 4, 1)"));
    let colored = stdout(&run(&["count", "colored-t11", "--n", "10", "--m", "3", "--list"]));
    let items: BTreeSet<&str> = colored.lines().skip(1).collect();
    assert_eq!(items.len(), 10);
    assert_eq!(stdout(&run(&["count", "hooks", "--n", "3", "--k", "1"])), "4\n");
    assert_eq!(code(&run(&["count", "bogus", "--n", "3"])), 2);
    assert_eq!(code(&run(&["count", "hooks", "--n", "3", "--k", "1", "--list"])), 2);
}

#[test]
fn count_families() {
    // odd distinct partitions of 8 are (7, 1) and (5, 3); each has two corners
    let o = stdout(&run(&["count", "hooks", "--n", "8", "--k", "1", "--family", "odd-distinct"]));
    assert_eq!(o, "4\n");
    let csv = stdout(&run(&["count", "fixed-by-part", "--n", "0..5", "--m", "1", "--k", "2", "--h", "0", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("oracle,m,k,h,n,count"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn table_formats() {
    let csv = stdout(&run(&["table", "--thm", "T14", "--k", "1..4", "--m", "1", "--order", "20", "--format", "csv"]));
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["n", "m=1 k=1", "m=1 k=2", "m=1 k=3", "m=1 k=4"]);
    assert_eq!(rows.len(), 21);
    assert!(rows.iter().all(|r| r.len() == 5));

    let json = stdout(&run(&["table", "--thm", "OddDistinctTotal", "--k", "1..3", "--order", "30", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 90);
    assert_eq!(cells[0]["theorem"], "OddDistinctTotal");

    let empty = run(&["table", "--thm", "T14", "--k", "3..1", "--m", "1", "--format", "csv"]);
    assert_eq!(code(&empty), 0);
    assert_eq!(stdout(&empty), "n\n");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("grid.conf");
    fs::write(&cfg, "# small grid\nthm = MFixedByHook\nm = 1..2\nk = 2\norder = 8\nformat = csv\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let from_file = stdout(&run(&["verify", "--config", cfg]));
    // header + (2 columns) x (h -3..1) x 8 exponents
    assert_eq!(from_file.lines().count(), 1 + 2 * 5 * 8);
    let overridden = stdout(&run(&["verify", "--config", cfg, "--order", "4", "--format", "text"]));
    assert!(overridden.lines().all(|l| !l.contains("N=8")));
    assert!(overridden.contains("MFixedByHook m=1 k=2 h=0 N=4"));

    fs::write(dir.path().join("bad.conf"), "colour = red\n").unwrap();
    let bad = run(&["verify", "--config", dir.path().join("bad.conf").to_str().unwrap()]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("series.csv");
    let o = run(&["series", "--thm", "T12", "--m", "2", "--h", "-1", "--order", "8", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("theorem,m,k,h,n,coefficient\nT12,2,,-1,0,0\n"), "{text}");
}

#[test]
fn timings_only_when_asked() {
    let plain = stdout(&run(&["verify", "--thm", "T11", "--m", "1..2", "--order", "6"]));
    assert!(!plain.contains(" ms"));
    let timed = stdout(&run(&["verify", "--thm", "T11", "--m", "1..2", "--order", "6", "--timings"]));
    assert!(timed.lines().filter(|l| l.starts_with("pass")).all(|l| l.ends_with(" ms")));
}
