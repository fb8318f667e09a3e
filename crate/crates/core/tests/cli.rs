use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jordan-lab"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn report_all_passes_and_is_byte_identical() {
    let (code, first) = run(&["report", "all"]);
    assert_eq!(code, 0, "{first}");
    let (_, second) = run(&["report", "all"]);
    assert_eq!(first, second);
    let rows: serde_json::Value = serde_json::from_str(&first).unwrap();
    let ids: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["claim_id"].as_str().unwrap()).collect();
    for id in ["lemma52.n5", "symmetry.deg6", "dp5.5:4", "conic.constant", "constants.dim3"] {
        assert!(ids.contains(&id), "{id} missing");
    }
}

#[test]
fn markdown_tables_per_suite() {
    let (code, md) = run(&["dp5", "check", "--emit", "md"]);
    assert_eq!(code, 0);
    assert!(md.starts_with("### dp5\n"));
    assert_eq!(md.matches("| pass |").count(), 6);
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(run(&["enumerate", "--degree", "0"]).0, 2);
    assert_eq!(run(&["verify", "lemma52", "--n", "6"]).0, 2);
    assert_eq!(run(&["report", "nonsense"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn bad_modulus_is_informational_when_allowed() {
    let (code, out) = run(&["verify", "lemma52", "--n", "4", "--allow-bad-n"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"status\": \"informational\""));
}

#[test]
fn enumerate_lists_the_hexagon() {
    let (code, out) = run(&["enumerate", "--degree", "6"]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    let best = rows.iter().map(|r| r["symmetry_order"].as_u64().unwrap()).max();
    assert_eq!(best, Some(12));
}

#[test]
fn jordan_reads_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.json");
    std::fs::write(&path, r#"{"kind":"perm","degree":4,"generators":[[[1,2,3,4]],[[1,2]]]}"#).unwrap();
    let (code, out) = run(&["jordan", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows[0]["computed"]["jordan_index"], 6);
    assert_eq!(rows[0]["claim_id"], "jordan.s4");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind":"perm","degree":2,"generators":[[[1,3]]]}"#).unwrap();
    let (code, out) = run(&["jordan", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("\"status\": \"fail\""));
}

#[test]
fn conic_simulation_is_reproducible() {
    let (code, a) = run(&["conic", "simulate", "--seed", "3", "--trials", "40"]);
    assert_eq!(code, 0);
    let (_, b) = run(&["conic", "simulate", "--seed", "3", "--trials", "40"]);
    assert_eq!(a, b);
}
