use kolchin::cli::{execute, parse_poly, Outcome};
use kolchin::NumPoly;
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    execute(std::iter::once("kolchin").chain(args.iter().copied()))
}

fn run_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn dimpoly_all_methods_on_two_row_set() {
    let v = run_json(&[
        "dimpoly",
        "--inline",
        "m=2; rows=(1,2),(2,1)",
        "--method",
        "all",
    ]);
    // 2s+2 = 2·C(s+1,1) + 0
    assert_eq!(v["standard"], serde_json::json!([2, 0]));
    assert_eq!(v["minimizing"], serde_json::json!([2, 1]));
    assert_eq!(
        v["macaulay"]["original"]["values"],
        serde_json::json!([2, 3])
    );
    assert_eq!(
        v["macaulay"]["renumbered"]["values"],
        serde_json::json!([2, 3])
    );
    assert_eq!(v["kolchin"], Value::Bool(true));
    assert_eq!(v["method_agreement"], Value::Bool(true));
    assert_eq!(v["degree"], 1);
}

#[test]
fn dimpoly_text_mentions_agreement() {
    let out = run(&["dimpoly", "--inline", "m=2; rows=(1,1)", "--method", "all"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.contains("polynomial: 2·C(s+1,1) - 1"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("interp, rec, ie agree"));
}

#[test]
fn minimize_literal() {
    // "2,3" is 2·C(s+1,1) + 3 = 2s+5
    let v = run_json(&["minimize", "--poly", "2,3"]);
    assert_eq!(v["minimizing"], serde_json::json!([2, 4]));
    let out = run(&["minimize", "--poly", "1,-2"]);
    assert!(out.stdout.contains("minimizing (b_d..b_0): (1,-2)"));
    assert!(out.stdout.contains("kolchin: false"));
}

#[test]
fn oracle_table_agrees_from_bound() {
    let v = run_json(&["oracle", "--inline", "m=2; rows=(1,1)", "--s-max", "6"]);
    assert_eq!(v["stabilization_bound"], 2);
    let table = v["table"].as_array().unwrap();
    assert_eq!(table.len(), 7);
    for row in table {
        let s = row["s"].as_i64().unwrap();
        // direct enumeration: the two axes carry 2s+1 points for every s >= 0
        assert_eq!(row["count"].as_i64().unwrap(), 2 * s + 1);
        assert_eq!(row["agree"], Value::Bool(true));
    }
    let text = run(&["oracle", "--inline", "m=1; rows=(3)", "--s-max", "4"]);
    assert!(
        text.stdout.contains("   0            1            3  no"),
        "{}",
        text.stdout
    );
}

#[test]
fn emitted_polynomials_round_trip() {
    let v = run_json(&["dimpoly", "--inline", "m=3; rows=(1,2,0),(0,1,1),(2,0,3)"]);
    let literal = v["literal"].as_str().unwrap().to_string();
    let constants = v["macaulay"]["literal"].as_str().unwrap().to_string();
    let again = run_json(&["minimize", "--poly", &literal]);
    assert_eq!(again["standard"], v["standard"]);
    assert_eq!(again["minimizing"], v["minimizing"]);
    let rebuilt = run_json(&["reconstruct", "--constants", &constants]);
    assert_eq!(rebuilt["standard"], v["standard"]);
}

#[test]
fn reconstruct_and_membership() {
    let v = run_json(&["reconstruct", "--constants", "2,4"]);
    assert_eq!(v["standard"], serde_json::json!([2, 1]));
    let v = run_json(&["is-kolchin", "--poly", "-1"]);
    assert_eq!(v["kolchin"], Value::Bool(false));
    assert_eq!(v["macaulay_nondecreasing"], Value::Bool(false));
    let v = run_json(&["macaulay", "--poly", "3,-3"]);
    assert_eq!(
        v["macaulay"]["original"]["values"],
        serde_json::json!([3, 3])
    );
}

#[test]
fn compare_orders_by_minimizing_coefficients() {
    let v = run_json(&["compare", "--poly", "5", "--poly", "1,0"]);
    assert_eq!(v["order"], "less");
    let v = run_json(&["compare", "--poly", "1,1", "--poly", "1,0"]);
    assert_eq!(v["order"], "greater");
    let out = run(&["compare", "--poly", "1,1"]);
    assert_eq!(out.code, 1);
}

#[test]
fn examples_and_report() {
    let v = run_json(&["example", "ex2", "--k", "5"]);
    assert_eq!(v["standard"], serde_json::json!([2, 3]));
    assert_eq!(v["minimizing"], serde_json::json!([2, 4]));
    let v = run_json(&["example", "single", "--m", "3", "--d", "2"]);
    assert_eq!(v["order"], 2);
    let v = run_json(&["example", "triangular", "--m", "2"]);
    assert_eq!(v["standard"], serde_json::json!([1, 2]));
    let v = run_json(&["report", "--m-max", "4"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert!(v["rows"][3]["identity"]["holds"].as_bool().unwrap());
    let text = run(&["report", "--m-max", "3"]);
    assert!(text.stdout.contains("published"));
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("kolchin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sys.json");
    std::fs::write(&path, r#"{"m": 2, "sets": [[[1,1]], [[1,1]]]}"#).unwrap();
    let v = run_json(&[
        "dimpoly",
        "--file",
        path.to_str().unwrap(),
        "--method",
        "all",
    ]);
    // 4s+2 = 4·C(s+1,1) - 2
    assert_eq!(v["standard"], serde_json::json!([4, -2]));
    std::fs::write(&path, r#"{"m": 2, "sets": [[[1,-1]]]}"#).unwrap();
    assert_eq!(run(&["dimpoly", "--file", path.to_str().unwrap()]).code, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["dimpoly", "--inline", "m=2; rows=(1,-2)"]).code, 1);
    assert_eq!(run(&["dimpoly", "--inline", "m=2; rows=(1,2,3)"]).code, 1);
    assert_eq!(run(&["example", "ex2", "--k", "1"]).code, 1);
    assert_eq!(run(&["minimize", "--poly", "x"]).code, 1);
    assert_eq!(run(&["dimpoly"]).code, 1);
    assert_eq!(
        run(&["dimpoly", "--inline", "m=2", "--file", "x.json"]).code,
        1
    );
    assert_eq!(run(&["frobnicate"]).code, 1);
    let guarded = run(&["dimpoly", "--inline", "m=3; rows=(9,9,9)", "--budget", "50"]);
    assert_eq!(guarded.code, 3);
    assert!(guarded.stderr.contains("oracle budget exceeded"));
    let many: Vec<String> = (0..21).map(|i| format!("({},{})", i, 20 - i)).collect();
    let inline = format!("m=2; rows={}", many.join(","));
    assert_eq!(
        run(&["dimpoly", "--inline", &inline, "--method", "ie"]).code,
        3
    );
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "dimpoly",
        "--inline",
        "m=3; rows=(2,0,1),(0,2,2),(1,1,0)",
        "--method",
        "all",
        "--format",
        "json",
    ];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn literal_parse_matches_library() {
    assert_eq!(
        parse_poly("1,0,-1").unwrap(),
        NumPoly::from_standard([1, 0, -1])
    );
}

#[test]
fn binary_forwards_exit_status() {
    let bin = env!("CARGO_BIN_EXE_kolchin");
    let ok = std::process::Command::new(bin)
        .args(["dimpoly", "--inline", "m=2; rows=(1,1)"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("2·C(s+1,1) - 1"));
    let bad = std::process::Command::new(bin)
        .args(["example", "ex2", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let guarded = std::process::Command::new(bin)
        .args(["dimpoly", "--inline", "m=4; rows=(5,5,5,5)"])
        .env("KOLCHIN_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(guarded.status.code(), Some(3));
}
