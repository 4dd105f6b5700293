use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_palintiple")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tsv(args: &[&str]) -> Vec<Vec<String>> {
    let mut full = args.to_vec();
    full.push("--tsv");
    let out = run(&full);
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect()
}

#[test]
fn classify_reports_carries_and_class() {
    let v = json(&["classify", "--input", "8,7,1,2@10*4"]);
    assert_eq!(v["class"], "symmetric");
    assert_eq!(v["carries"], serde_json::json!([0, 3, 3, 0]));
    assert_eq!(v["value"], "8712");
    assert_eq!(v["reversal"], "2178");
}

#[test]
fn classify_rejects_non_palintiple_with_status_one() {
    let out = run(&["classify", "--input", "8,7,1,3@10*4"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["classify", "--input", "not-a-literal"],
        vec!["frobnicate"],
        vec!["young"],
        vec!["young", "--base", "3", "--mult", "5"],
        vec!["derive", "--input", "8,7,1,2@10*4", "--mode", "triple", "--nhat", "10"],
        vec!["permutiple", "--digits", "3,8,9", "--bases", "5..9"],
        vec!["young", "correspond", "2,3", "3,14", "--max-len", "2"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn hoey_family_matches_published_table() {
    let rows = tsv(&["family", "--theorem", "hoey", "--input", "2,1,2,0,1@3*2", "--alphas", "3"]);
    let got: Vec<(String, String)> = rows[1..].iter().map(|r| (r[2].clone(), r[3].clone())).collect();
    let want = [("14", "5,3,12,8,10,1"), ("22", "8,5,19,13,16,2"), ("30", "11,7,26,18,22,3")];
    assert_eq!(got.len(), 3);
    for ((b, d), (wb, wd)) in got.iter().zip(want) {
        assert_eq!((b.as_str(), d.as_str()), (wb, wd));
    }
}

#[test]
fn family_json_has_affine_base() {
    let v = json(&["family", "--theorem", "sutcliffe", "--input", "3,1@5*2", "--nhat", "9", "--alphas", "1"]);
    assert_eq!(v["family"]["base"], serde_json::json!({ "a0": 27, "a1": 80 }));
    assert_eq!(v["instances"][0]["digits"], serde_json::json!([12, 40, 1]));
}

#[test]
fn instantiate_single_member() {
    let v = json(&["instantiate", "--input", "47,7@55*6", "--theorem", "pudwell", "--alpha", "4"]);
    assert_eq!(v["base"], 1728);
    assert_eq!(v["carries"], serde_json::json!([0, 47, 7, 0]));
    let out = run(&["instantiate", "--input", "47,7@55*6", "--theorem", "pudwell", "--alpha", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn young_iso_and_graph() {
    assert_eq!(json(&["young", "iso", "3,14", "3,22"])["isomorphic"], true);
    assert_eq!(json(&["young", "iso", "9,10", "3,14"])["isomorphic"], false);
    let v = json(&["young", "--base", "10", "--mult", "9"]);
    assert_eq!(v["nodes"], serde_json::json!([[0, 0], [0, 8], [8, 0], [8, 8]]));
    assert_eq!(v["is_1089"], true);
}

#[test]
fn young_writes_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.dot");
    json(&["young", "--base", "5", "--mult", "2", "--dot", path.to_str().unwrap(), "--canonical"]);
    let dot = std::fs::read_to_string(path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("label=\"3,1\""), "{dot}");
}

#[test]
fn correspondence_failure_exits_one() {
    assert_eq!(json(&["young", "correspond", "2,3", "3,14", "--max-len", "6"])["carries_are_palintiples"], true);
    let out = run(&["young", "correspond", "2,5", "9,107", "--max-len", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["carry_counterexamples"][0]["palintiple"], "24,80,2@107*9");
}

#[test]
fn enumerate_tsv_lists_8712_and_9801() {
    let rows = tsv(&["enumerate", "--base", "10", "--digits", "4"]);
    assert_eq!(rows[0], ["multiplier", "base", "digits", "carries", "class"]);
    let digits: Vec<&str> = rows[1..].iter().map(|r| r[2].as_str()).collect();
    assert_eq!(digits, ["8,7,1,2", "9,8,0,1"]);
}

#[test]
fn enumerate_cap_truncates() {
    let v = json(&["enumerate", "--max-base", "12", "--digits", "2..3", "--cap", "5"]);
    assert_eq!(v["count"], 5);
    assert_eq!(v["truncated"], true);
}

#[test]
fn palinomial_identities_and_factors() {
    let v = json(&[
        "palinomial",
        "--input",
        "8,7,9,9,9,1,2@10*4",
        "--derived-from",
        "28,25,136,138,138,110,113,2@139*10",
    ]);
    let passed: Vec<&str> = v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["passed"] == true)
        .map(|i| i["kind"].as_str().unwrap())
        .collect();
    assert!(passed.contains(&"derived-forward"), "{passed:?}");
    assert_eq!(
        v["derived_factorizations"][0]["factors"],
        serde_json::json!([[-139, 1], [2, -1, 8], [1, 1, 1, 1, 1]])
    );
}

#[test]
fn palinomial_roots_are_deterministic() {
    let args = ["palinomial", "--input", "8,7,1,2@10*4", "--roots"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let pal = &v["roots"]["results"][0];
    assert_eq!(pal["polynomial"], "pal");
    assert_eq!(pal["on_unit_circle"], true);
    assert_eq!(pal["witness"], serde_json::json!([-1.0, 0.0]));
}

#[test]
fn scan_reports_population_and_exits_zero() {
    let v = json(&["scan", "pudwell", "--max-base", "40", "--lengths", "2,3"]);
    assert!(v["population"].as_str().unwrap().contains("<= 40"));
    assert_eq!(v["witnesses"], serde_json::json!([]));
    assert!(v.get("elapsed").is_none());
}

#[test]
fn verify_paper_sections_and_fault() {
    let v = json(&["verify-paper", "--section", "palinomials"]);
    assert!(v["total"].as_u64().unwrap() >= 1);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["topic"] == "palinomials"));
    let out = run(&["verify-paper", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failed"], 1);
}

#[test]
fn full_corpus_passes() {
    let v = json(&["verify-paper"]);
    assert_eq!(v["failed"], 0);
    assert!(v["total"].as_u64().unwrap() >= 25);
}

#[test]
fn jobs_flag_does_not_change_output() {
    let one = run(&["--jobs", "1", "young", "evidence", "--theorem", "pudwell", "--max-base", "12"]);
    let four = run(&["--jobs", "4", "young", "evidence", "--theorem", "pudwell", "--max-base", "12"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}
