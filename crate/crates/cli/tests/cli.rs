//! End-to-end runs of the `ulm` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ulm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulm")).args(args).env_remove("ULM_BUDGET_PAIRS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn golden_5_1() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/worst_terms_5_1.json")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("ulm-cli-{}-{name}", std::process::id()))
}

#[test]
fn verify_all_passes_on_the_smallest_chart() {
    let json = temp_path("report.json");
    let o = ulm(&["verify", "--n", "5", "--kappa", "1", "--suite", "all", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["chart"]["n"], 5);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass" && c["timing_ms"].is_u64()));
    let ids: Vec<&str> = checks.iter().map(|c| c["check_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    std::fs::remove_file(json).ok();
}

#[test]
fn kappa_zero_warns_and_still_runs_basis() {
    let o = ulm(&["verify", "--n", "5", "--kappa", "0", "--suite", "components", "--suite", "basis"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not strongly non-special"));
    let out = stdout(&o);
    assert!(out.contains("basis.spin-basis"));
    assert!(!out.contains("components."));
}

#[test]
fn budget_overrun_has_its_own_exit_code() {
    let o = ulm(&["verify", "--n", "5", "--kappa", "1", "--suite", "components", "--budget-pairs", "3"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("skipped-budget"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(ulm(&["verify", "--n", "2", "--kappa", "1"]).status.code(), Some(2));
    assert_eq!(ulm(&["emit-ideal", "--n", "5", "--kappa", "1", "--which", "nope"]).status.code(), Some(2));
    assert_eq!(ulm(&["emit-ideal", "--n", "5", "--kappa", "1", "--which", "full", "--prime", "2"]).status.code(), Some(2));
}

#[test]
fn emit_final_ideal_text_and_json() {
    let o = ulm(&["emit-ideal", "--n", "6", "--kappa", "1", "--which", "final"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("order: grevlex a_1_1 > "));
    assert!(text.contains("-a_1_2*a_2_1 + a_1_1*a_2_2"));
    // tr(AH) for 4 x 4 A.
    assert!(text.lines().any(|l| l == "a_1_4 + a_2_3 + a_3_2 + a_4_1"));

    let o = ulm(&["emit-ideal", "--n", "5", "--kappa", "1", "--which", "integral", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["variables"].as_array().unwrap().iter().any(|x| x == "pi"));
    assert!(v["generators"].as_array().unwrap().iter().any(|g| g["source"] == "LM6"));
}

#[test]
fn worst_terms_match_the_committed_golden_file() {
    let o = ulm(&["worst-terms", "--n", "5", "--kappa", "1"]);
    let golden: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(golden_5_1()).unwrap()).unwrap();
    let expected: Vec<&str> = golden["lines"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), expected);
    for l in &expected {
        assert_eq!(l.split("; ").count(), 4, "{l}");
    }
}

#[test]
fn golden_diff_reports_one_perturbed_line() {
    let o = ulm(&["golden-diff", golden_5_1().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());

    let mut g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(golden_5_1()).unwrap()).unwrap();
    let line = g["lines"][3].as_str().unwrap().to_string();
    let (head, terms) = line.rsplit_once("; ").unwrap();
    let flipped = terms.strip_prefix('-').map(str::to_string).unwrap_or_else(|| format!("-{terms}"));
    g["lines"][3] = serde_json::Value::String(format!("{head}; {flipped}"));
    let path = temp_path("perturbed.json");
    std::fs::write(&path, serde_json::to_string_pretty(&g).unwrap()).unwrap();
    let o = ulm(&["golden-diff", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1, "{out}");
    let mut parts = line.split("; ");
    let (set, case) = (parts.next().unwrap(), parts.next().unwrap());
    assert!(out.contains(&format!("S = {set}, case {case}")), "{out}");
    std::fs::remove_file(path).ok();
}

#[test]
fn spin_basis_passes_and_threads_flag_is_accepted() {
    let o = ulm(&["--threads", "2", "spin-basis", "--n", "5", "--kappa", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("15 elements, rank 15"));
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let run = |threads: &str| {
        let o = ulm(&["--threads", threads, "verify", "--n", "5", "--kappa", "1", "--format", "json"]);
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        for c in v["checks"].as_array_mut().unwrap() {
            c["timing_ms"] = 0.into();
        }
        v.to_string()
    };
    assert_eq!(run("1"), run("4"));
}
