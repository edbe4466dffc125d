//! End-to-end tests of the command-line interface: golden outputs, the
//! exit-code contract, spec round-trips and byte-level determinism.

use std::io::Write;
use std::process::{Command, Output};

fn factorinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = factorinv(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    factorinv(args).status.code().unwrap()
}

#[test]
fn catenary_of_five_generator_semigroup() {
    assert_eq!(stdout_of(&["catenary", "--gens", "10,17,24,31,43"]), "6\n");
}

#[test]
fn omega_of_large_generators() {
    assert_eq!(stdout_of(&["omega", "--gens", "201,223,357"]), "75\n");
}

#[test]
fn factorize_66_as_json() {
    let out = stdout_of(&[
        "factorize",
        "--gens",
        "6,9,11",
        "--element",
        "66",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let vectors = doc["values"]["factorizations"].as_array().unwrap();
    assert_eq!(vectors.len(), 7);
    assert!(vectors.contains(&serde_json::json!([11, 0, 0])));
    assert_eq!(doc["spec"]["type"], "numerical");
}

#[test]
fn factorize_non_element_is_empty_not_an_error() {
    assert_eq!(stdout_of(&["factorize", "--gens", "3,5,7", "--element", "4"]), "[]\n");
}

#[test]
fn catenary_flavors() {
    let gens = ["--gens", "10,17,24,31,43"];
    for (flavor, expected) in [("equal", "11\n"), ("homogeneous", "11\n"), ("monotone", "11\n")] {
        assert_eq!(
            stdout_of(&[&["catenary"], &gens[..], &["--flavor", flavor]].concat()),
            expected,
            "flavor {flavor}"
        );
    }
}

#[test]
fn davenport_and_blockmonoid() {
    assert_eq!(
        stdout_of(&["davenport", "--moduli", "2,2", "--elements", "(0,1),(1,0),(1,1)"]),
        "3\n"
    );
    assert_eq!(
        stdout_of(&["blockmonoid", "--moduli", "2,2", "--elements", "(0,1),(1,0),(1,1)"]),
        "[(0,0,2),(0,2,0),(1,1,1),(2,0,0)]\n"
    );
}

#[test]
fn affine_semigroup_inline() {
    assert_eq!(
        stdout_of(&["betti", "--gens", "(2,0),(0,2),(1,1),(1,2)"]),
        "[(2,2),(2,4)]\n"
    );
    assert_eq!(
        stdout_of(&["omega", "--gens", "(2,0),(0,2),(1,1),(1,2)", "--element", "(2,0)"]),
        "2\n"
    );
}

#[test]
fn kernel_subcommands() {
    assert_eq!(
        stdout_of(&["graver", "--matrix", "2,3"]),
        "[(3,-2)]\n"
    );
    assert_eq!(
        stdout_of(&["circuits", "--matrix", "2,3"]),
        "[(3,-2)]\n"
    );
    assert_eq!(
        stdout_of(&["hilbert", "--matrix", "0,1,1;1,0,1", "--moduli", "2,2"]),
        "[(0,0,2),(0,2,0),(1,1,1),(2,0,0)]\n"
    );
}

#[test]
fn apery_and_delta() {
    assert_eq!(stdout_of(&["apery", "--gens", "3,5,7"]), "[0,5,7]\n");
    let out = stdout_of(&["delta", "--gens", "701,902,1041", "--bound", "313436"]);
    assert!(out.starts_with("delta: [1,2,3,4,5,6,11,17]\n"), "got {out}");
    assert!(out.contains("delta_min: 1\n"));
    assert!(out.contains("delta_max: 17\n"));
}

#[test]
fn exit_code_contract() {
    // 2: malformed input
    assert_eq!(exit_code(&["catenary", "--gens", "abc"]), 2);
    assert_eq!(exit_code(&["factorize", "--gens", "3,5,7"]), 2); // missing --element
    assert_eq!(exit_code(&["delta", "--gens", "3,5,7"]), 2); // missing --bound
    // clap usage errors are also 2
    assert_eq!(exit_code(&["no-such-command"]), 2);
    // 3: semantic errors
    assert_eq!(exit_code(&["catenary", "--gens", "2,4"]), 3); // gcd 2
    assert_eq!(exit_code(&["lengths", "--gens", "3,5,7", "--element", "4"]), 3);
    assert_eq!(exit_code(&["davenport", "--moduli", "0", "--elements", "(1)"]), 3);
    // 4: resource limit
    assert_eq!(
        exit_code(&["graver", "--matrix", "10,17,24,31,43,0;1,1,1,1,1,1", "--max-steps", "5"]),
        4
    );
    // 0: success
    assert_eq!(exit_code(&["catenary", "--gens", "3,5,7"]), 0);
}

#[test]
fn semigroup_file_round_trip() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("factorinv-spec-{}.json", std::process::id()));
    let mut file = std::fs::File::create(&path).unwrap();
    write!(
        file,
        "{}",
        r#"{"type":"block","moduli":[2,2],"elements":[[0,1],[1,0],[1,1]]}"#
    )
    .unwrap();
    let out = stdout_of(&[
        "davenport",
        "--semigroup",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out, "3\n");

    // a spec echoed in a JSON report re-parses to an equivalent spec
    let json = stdout_of(&[
        "betti",
        "--semigroup",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let echoed = serde_json::to_string(&doc["spec"]).unwrap();
    let reparse_path = dir.join(format!("factorinv-echo-{}.json", std::process::id()));
    std::fs::write(&reparse_path, &echoed).unwrap();
    let again = stdout_of(&["davenport", "--semigroup", reparse_path.to_str().unwrap()]);
    assert_eq!(again, "3\n");
    std::fs::remove_file(path).ok();
    std::fs::remove_file(reparse_path).ok();
}

#[test]
fn malformed_spec_file_is_exit_2() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("factorinv-bad-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"type":"numerical"}"#).unwrap();
    assert_eq!(exit_code(&["catenary", "--semigroup", path.to_str().unwrap()]), 2);
    std::fs::write(&path, "not json at all").unwrap();
    assert_eq!(exit_code(&["catenary", "--semigroup", path.to_str().unwrap()]), 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn byte_identical_output_across_runs() {
    let args = ["report", "--gens", "3,5,7", "--format", "json"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    // values are deterministic even when timings are requested
    let doc: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["values"]["catenary"], serde_json::json!(4));
    assert_eq!(doc["values"]["max_denumerant"], serde_json::json!(2));
    assert!(doc.get("timings_ms").is_none());
}

#[test]
fn report_battery_on_small_semigroup() {
    let out = stdout_of(&["report", "--gens", "2,3"]);
    assert!(out.contains("generators: [2,3]\n"), "got {out}");
    assert!(out.contains("catenary: 3\n"));
    assert!(out.contains("equal_catenary: 0\n"));
    assert!(out.contains("homogeneous_catenary: 3\n"));
    assert!(out.contains("monotone_catenary: 3\n"));
    assert!(out.contains("tame: 3\n"));
    assert!(out.contains("omega: 3\n"));
    assert!(out.contains("elasticity: 3/2\n"));
    assert!(out.contains("half_factorial: false\n"));
    assert!(out.contains("frobenius: 1\n"));
}

#[test]
fn parallel_flag_does_not_change_values() {
    let plain = stdout_of(&["tame", "--gens", "10,17,24,31,43"]);
    let parallel = stdout_of(&["tame", "--gens", "10,17,24,31,43", "--parallel", "2"]);
    assert_eq!(plain, parallel);
    assert_eq!(plain, "11\n");
}

#[test]
fn timings_flag_adds_comment_lines_only() {
    let out = stdout_of(&["catenary", "--gens", "3,5,7", "--timings"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("4"));
    assert!(lines.next().unwrap().starts_with("# catenary: "));
}
