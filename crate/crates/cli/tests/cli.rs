use presmat_cli::report::{Outcome, Report};
use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn presmat(args: &[&str]) -> (i32, Report) {
    let out = Command::new(env!("CARGO_BIN_EXE_presmat"))
        .args(args)
        .arg("--format")
        .arg("json")
        .env_remove("PRESMAT_BUDGET_SECS")
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("bad report ({e}):\n{stdout}"));
    (out.status.code().unwrap(), report)
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    std::io::Write::write_all(&mut f, text.as_bytes()).unwrap();
    f
}

#[test]
fn check_example_matrix_is_presentation() {
    let path = fixture("four-by-four");
    let (code, r) = presmat(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.outcome, Outcome::Success);
    assert_eq!(r.result["is_presentation"], true);
    assert_eq!(r.result["gamma"]["components"], serde_json::json!(["z*t", "x*t", "x*y", "y*z"]));
    assert_eq!(r.result["height_j"], 4);
}

#[test]
fn check_transpose_fails_on_height() {
    let f = write_temp(
        r#"{"ring": {"vars": ["x","y","z","t"]},
            "matrix": [["y","0","0","-t"],["-x","z","0","0"],["0","-y","t","0"],["0","0","-z","x"]]}"#,
    );
    let (code, r) = presmat(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r.outcome, Outcome::Negative);
    assert_eq!(r.witness.unwrap(), serde_json::json!({"kind": "height_j", "height": 2}));
}

#[test]
fn gamma_and_transpose() {
    let path = fixture("four-by-four");
    let (code, r) = presmat(&["gamma", path.to_str().unwrap(), "--transpose"]);
    assert_eq!(code, 0);
    assert_eq!(r.result["gamma"], serde_json::json!(["x", "y", "z", "t"]));
}

#[test]
fn resolve_ideal_and_matrix() {
    let (code, r) = presmat(&["resolve", fixture("cyclic-quartics").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.result["betti_sequence"], "(4,4,4,4,4,4; 5,5,5,5,5,5; 6)");
    let (code, r) = presmat(&["resolve", fixture("koszul").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.result["exactness"]["exact"], true);
    assert_eq!(r.result["betti_sequence"], "(1,1,1; 2,2,2; 3)");
}

#[test]
fn zeta_and_decompose() {
    let (code, r) = presmat(&["zeta", fixture("four-by-four").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.result["zeta"], 0);
    let f = write_temp(
        r#"{"ring": {"vars": ["x","y","z","u","v","w"]},
            "matrix": [["u","0","0"],["0","v","0"],["0","0","w"],["x","y","z"]]}"#,
    );
    let (code, r) = presmat(&["decompose", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r.verdict.as_deref(), Some("regular"));
    assert_eq!(r.result["intersection_identity"], true);
}

#[test]
fn classify_exit_codes() {
    let (code, r) = presmat(&["betti-classify", "--homogeneous", "4", "3", "5"]);
    assert_eq!(code, 2);
    assert_eq!(r.verdict.as_deref(), Some("NotEssential"));
    let (code, r) = presmat(&["betti-classify", "3,4,5; 8,7,6; 9"]);
    assert_eq!(code, 0);
    assert_eq!(r.witness.unwrap()["kind"], "three_generators");
    let (code, r) = presmat(&["betti-classify", "--homogeneous", "4", "7", "11"]);
    assert_eq!(code, 3);
    assert_eq!(r.outcome, Outcome::Unknown);
    let (code, r) = presmat(&["betti-classify", "5,5,5,5; 8,8,8,8; 12"]);
    assert_eq!(code, 0);
    assert_eq!(r.witness.unwrap()["name"], "closing-remark");
}

#[test]
fn reduce_and_lift() {
    let (code, r) = presmat(&["betti-reduce", "2,2,2,3; 4,3,3,3; 4", "--strategy", "smallest"]);
    assert_eq!(code, 0);
    assert_eq!(r.result["residue"], "(1,1,1; 2,2,2; 3)");
    let (code, r) = presmat(&["betti-lift", "1,1,1; 2,2,2; 3", "--u", "1,0,2"]);
    assert_eq!(code, 0);
    assert_eq!(r.result["lifted"], "(2,3,4; 5,5,5; 6)");
}

#[test]
fn construct_with_oracle() {
    let (code, r) = presmat(&["construct", "--homogeneous", "5", "4", "6", "--oracle"]);
    assert_eq!(code, 0, "{:?}", r.error);
    assert_eq!(r.result["oracle_sequence"], "(4,4,4,4,4; 6,6,6,6,6; 10)");
    let (code, r) = presmat(&["construct", "2,2,2,3; 4,3,3,3; 4", "--oracle"]);
    assert_eq!(code, 0, "{:?}", r.error);
    assert_eq!(r.result["sequence"], "(2,2,2,3; 4,3,3,3; 4)");
    let (code, r) = presmat(&["construct", "3,3,3,3; 5,5,5,5; 8"]);
    assert_eq!(code, 1);
    assert!(r.error.unwrap().contains("NotEssential"));
}

#[test]
fn all_scenarios_reproduce() {
    let (code, r) = presmat(&["verify-paper-example", "--list"]);
    assert_eq!(code, 0);
    let names: Vec<String> =
        r.result["scenarios"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names.len(), 7);
    for name in &names {
        let (code, r) = presmat(&["verify-paper-example", name]);
        assert_eq!(code, 0, "{name}: {:?}", r.error);
        assert_eq!(r.verdict.as_deref(), Some("reproduced"));
    }
}

#[test]
fn closing_remark_full_resolution() {
    let (code, r) = presmat(&["verify-paper-example", "closing-remark", "--full"]);
    assert_eq!(code, 0, "{:?}", r.error);
    let checks = r.result["checks"].as_array().unwrap();
    assert_eq!(checks[0]["observed"], "2");
    assert_eq!(checks[2]["observed"], "(5,5,5,5; 8,8,8,8; 12)");
}

#[test]
fn exhausted_budget_is_reported() {
    let (code, r) = presmat(&["verify-paper-example", "closing-remark", "--full", "--budget", "0.000000001"]);
    assert_eq!(code, 1);
    assert_eq!(r.verdict.as_deref(), Some("budget exceeded"));
    assert!(r.result["checks"].as_array().unwrap().iter().any(|c| c["status"] == "budget_exceeded"));
}

#[test]
fn input_errors_name_file_and_line() {
    let f = write_temp("{\n  \"ring\": {\"vars\": [\"x\", \"y\"]},\n  \"ideal\": [\n    \"x^2\",\n    \"x*w\"\n  ]\n}");
    let (code, r) = presmat(&["resolve", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    let msg = r.error.unwrap();
    assert!(msg.contains(":5: ideal[1]"), "{msg}");
    let (code, r) = presmat(&["check", "/nonexistent/m.json"]);
    assert_eq!(code, 1);
    assert!(r.error.unwrap().contains("/nonexistent/m.json"));
    let (code, _) = presmat(&["betti-classify", "1,2;3"]);
    assert_eq!(code, 1);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let path = fixture("three-generators");
    let args = ["verify-paper-example", "three-generators"];
    let (_, mut a) = presmat(&args);
    let (_, mut b) = presmat(&args);
    a.timings.total_ms = 0.0;
    b.timings.total_ms = 0.0;
    assert_eq!(a, b);
    let again: Report = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    assert_eq!(again, a);
    let bytes = std::fs::read(path).unwrap();
    assert_eq!(a.input_digest, presmat_cli::sha256_hex(&bytes));
}

#[test]
fn text_format_is_readable() {
    let out = Command::new(env!("CARGO_BIN_EXE_presmat"))
        .args(["betti-classify", "--homogeneous", "5", "4", "6"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: Essential"), "{text}");
    assert!(text.contains("kind: homogeneous"), "{text}");
}
