use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn ginv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ginv"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_reports_consistent_with_seven_parameters() {
    let o = ginv(&["--file", "example.mx", "solve"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("  consistent = true\n"));
    assert!(out.contains("  dimension = 7\n"));
    assert!(out.contains("particular solution =\n      [-1  0  0]\n      [-1  0  0]\n      [ 0  0  0]\n"));
    assert!(out.ends_with("verdict: consistent\n"));
}

#[test]
fn represent_proves_the_candidate_infeasible() {
    let o = ginv(&["--file", "example.mx", "represent", "--candidate", "X1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.ends_with("verdict: ProvenInfeasible\n"));
    let last_step = out.lines().rfind(|l| l.trim_start().starts_with('[')).unwrap();
    assert!(last_step.contains("] 0 = 1"), "{last_step}");
    assert!(out.contains("proof replays = true"));
}

#[test]
fn represent_finds_a_witness_for_a_representable_solution() {
    let o = ginv(&["--file", "example.mx", "represent", "--candidate", "X0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("witness verifies = true"));
    assert!(out.ends_with("verdict: Witness\n"));
}

#[test]
fn rnf_of_the_identity_is_trivial() {
    let o = ginv(&["--file", "identity3.mx", "rnf", "--matrix", "I"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let id = "      [1  0  0]\n      [0  1  0]\n      [0  0  1]\n";
    assert!(out.contains(&format!("  Q =\n{id}  P =\n{id}")));
    assert!(out.contains("  rank = 3\n"));
}

#[test]
fn consistency_and_reproductivity_verdicts() {
    let o = ginv(&["--file", "example.mx", "check-consistency"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verdict: consistent\n"));

    let o = ginv(&["--file", "example.mx", "check-reproductive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verdict: reproductive\n"));

    let o = ginv(&["--file", "example.mx", "check-reproductive", "--particular", "X1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("X0 − L·X0·R =\n      [-6  1  1]\n"));
    assert!(out.ends_with("verdict: not reproductive\n"));
}

#[test]
fn inconsistent_equation_exits_one() {
    let o = ginv(&["--file", "inconsistent.mx", "check-consistency"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("verdict: inconsistent\n"));
    let o = ginv(&["--file", "inconsistent.mx", "solve-kron"]);
    assert_eq!(o.status.code(), Some(1));
    let o = ginv(&["--file", "inconsistent.mx", "solve"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn linsys_on_the_kronecker_system() {
    let o = ginv(&["--file", "example.mx", "linsys", "--matrix", "K", "--rhs", "c"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("  rank = 2\n"));
    assert!(out.contains("  dimension = 7\n"));

    let o = ginv(&[
        "--file",
        "example.mx",
        "linsys",
        "--side",
        "left",
        "--matrix",
        "A",
        "--rhs",
        "r",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("solved through the transposed system"));
}

#[test]
fn solve_kron_checks_membership() {
    let o = ginv(&["--file", "example.mx", "solve-kron", "--candidate", "X1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("X1 in solution set = true"));
    let o = ginv(&["--file", "example.mx", "solve-kron", "--candidate", "A"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ginverse_symbolic_and_instantiated() {
    let o = ginv(&[
        "--file",
        "example.mx",
        "ginverse",
        "--matrix",
        "B",
        "--names",
        "g,h,p,q,r",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("parameter names = g, h, p, q, r"));
    assert!(out.contains("[1-g-2h-p+q+2r  g-q  h-r]"));

    let o = ginv(&["--file", "example.mx", "ginverse", "--matrix", "B", "--u", "U"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("B·B⁽¹⁾·B = B = true"));
}

#[test]
fn json_output_carries_the_same_facts() {
    let text = stdout(&ginv(&["--file", "example.mx", "solve"]));
    let json = stdout(&ginv(&["--file", "example.mx", "--json", "solve"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["verdict"], "consistent");
    assert_eq!(v["inputs"]["C"]["entries"][0], serde_json::json!(["-3", "1", "0", "1"]));
    for step in v["steps"].as_array().unwrap() {
        assert!(text.contains(step["title"].as_str().unwrap()));
        for fact in step["facts"].as_array().unwrap() {
            if let Some(label) = fact["label"].as_str() {
                assert!(text.contains(&format!("  {label} ")), "{label}");
            }
        }
    }
}

#[test]
fn report_matches_golden_files() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let o = ginv(&["--file", "example.mx", "report", "--candidate", "X1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        std::fs::read_to_string(golden.join("report_example.txt")).unwrap()
    );
    let o = ginv(&["--file", "example.mx", "report", "--candidate", "X1", "--json"]);
    assert_eq!(
        stdout(&o),
        std::fs::read_to_string(golden.join("report_example.json")).unwrap()
    );
}

#[test]
fn input_errors_exit_two_with_location() {
    let o = ginv(&["--file", "missing.mx", "rnf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing.mx"));

    let o = ginv(&["--file", "malformed.mx", "rnf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: malformed.mx:3:"), "{}", stderr(&o));

    let o = ginv(&["--file", "example.mx", "rnf", "--matrix", "Z"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("matrix Z is not defined"));

    let o = ginv(&["--file", "example.mx", "linsys", "--matrix", "A", "--rhs", "c"]);
    assert_eq!(o.status.code(), Some(2));

    let o = ginv(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));

    let o = ginv(&["rnf"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--file"));
}

#[test]
fn in_process_runner_matches_binary() {
    let dir = data_dir();
    let path = dir.join("example.mx");
    let out = ginv::cli::run(["--file", path.to_str().unwrap(), "check-consistency"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.ends_with("verdict: consistent\n"));
    assert!(out.stderr.is_empty());
}
