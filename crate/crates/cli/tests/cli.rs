//! End-to-end behavior of the binary: exit codes, input tolerance, and
//! byte-stable machine output.

use std::process::{Command, Output};

fn persemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_persemi"))
        .args(args)
        .env_remove("PERSEMI_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn check_exit_codes() {
    let ok = persemi(&["check", "9,14,15,16", "--n", "4"]);
    assert_eq!(code(&ok), 0);

    let failed = persemi(&["check", "4,5,7", "--n", "3"]);
    assert_eq!(code(&failed), 1);
    assert!(stdout_of(&failed).contains("block 0"));

    let invalid = persemi(&["check", "2,4", "--n", "2"]);
    assert_eq!(code(&invalid), 2);
    assert!(String::from_utf8(invalid.stderr).unwrap().contains("gcd"));
}

#[test]
fn generator_parsing_is_tolerant_but_strict() {
    // Whitespace and unsorted input are fine.
    let spaced = persemi(&["check", " 16, 9 , 15, 14", "--n", "4"]);
    assert_eq!(code(&spaced), 0);

    let duplicate = persemi(&["info", "3,4,3"]);
    assert_eq!(code(&duplicate), 2);
    assert!(String::from_utf8(duplicate.stderr)
        .unwrap()
        .contains("duplicate"));

    let garbage = persemi(&["info", "3,x"]);
    assert_eq!(code(&garbage), 2);

    // Missing required flag is a usage error.
    let usage = persemi(&["check", "3,4"]);
    assert_eq!(code(&usage), 2);
}

#[test]
fn check_json_failure_report() {
    let failed = persemi(&["check", "4,5,7", "--n", "3", "--format", "json"]);
    assert_eq!(code(&failed), 1);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&failed)).unwrap();
    assert_eq!(value["verdict"], false);
    assert_eq!(value["generated_by_prefix"], true);
    assert_eq!(value["first_failure"]["index"], 0);
    assert_eq!(value["first_failure"]["residues"][0], 1);
    assert_eq!(value["first_failure"]["residues"][2], 1);
}

#[test]
fn info_json_fields() {
    let output = persemi(&["info", "3,4", "--format", "json"]);
    assert_eq!(code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["multiplicity"], 3);
    assert_eq!(value["frobenius"], 5);
    assert_eq!(value["apery"], serde_json::json!([0, 4, 8]));
    assert_eq!(value["elements"][0], 0);
    assert_eq!(value["elements"].as_array().unwrap().len(), 30);

    let natural = persemi(&["info", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&natural)).unwrap();
    assert_eq!(value["frobenius"], -1);
}

#[test]
fn enumerate_output_is_independent_of_workers() {
    let single = persemi(&[
        "enumerate",
        "--n",
        "3",
        "--min",
        "1",
        "--max",
        "33",
        "--format",
        "json",
    ]);
    for workers in ["2", "4", "7"] {
        let multi = persemi(&[
            "enumerate",
            "--n",
            "3",
            "--min",
            "1",
            "--max",
            "33",
            "--format",
            "json",
            "--workers",
            workers,
        ]);
        assert_eq!(stdout_of(&single), stdout_of(&multi), "workers={workers}");
    }
    // The environment default changes scheduling only, never bytes.
    let via_env = Command::new(env!("CARGO_BIN_EXE_persemi"))
        .args([
            "enumerate",
            "--n",
            "3",
            "--min",
            "1",
            "--max",
            "33",
            "--format",
            "json",
        ])
        .env("PERSEMI_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(
        stdout_of(&single),
        String::from_utf8(via_env.stdout).unwrap()
    );
}

#[test]
fn enumerate_json_shape() {
    let output = persemi(&[
        "enumerate",
        "--n",
        "2",
        "--min",
        "1",
        "--max",
        "50",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["query"]["block_size"], 2);
    assert_eq!(value["found"], serde_json::json!([[1, 2], [2, 3], [3, 4]]));
    assert!(value["candidates_examined"].as_u64().unwrap() > 0);
}

#[test]
fn family_gen_and_domain_error() {
    let output = persemi(&["family", "gen", "H1", "--k", "5"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout_of(&output), "15,16,29\n");

    let nfam = persemi(&["family", "gen", "N4", "--k", "2", "--format", "csv"]);
    assert_eq!(stdout_of(&nfam), "family,k,generators\nN4,2,9 14 15 16\n");

    let bad = persemi(&["family", "gen", "H5", "--k", "1"]);
    assert_eq!(code(&bad), 2);

    let unknown = persemi(&["family", "gen", "H42", "--k", "1"]);
    assert_eq!(code(&unknown), 2);
}

#[test]
fn family_verify_cli() {
    let all = persemi(&[
        "family", "verify", "--all", "--kmax", "3", "--format", "csv",
    ]);
    assert_eq!(code(&all), 0);
    let text = stdout_of(&all);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "family,k,ok,bound,first_mismatch");
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));

    let single = persemi(&["family", "verify", "H13", "--k", "1"]);
    assert_eq!(code(&single), 0);

    let sweep = persemi(&["family", "verify", "N5", "--kmax", "4"]);
    assert_eq!(code(&sweep), 0);
    assert_eq!(stdout_of(&sweep).lines().count(), 4);

    let missing = persemi(&["family", "verify"]);
    assert_eq!(code(&missing), 2);
    let conflicting = persemi(&["family", "verify", "H1", "--k", "1", "--kmax", "2"]);
    assert_eq!(code(&conflicting), 2);
}

#[test]
fn family_match_cli() {
    let output = persemi(&["family", "match", "17,24,25"]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout_of(&output), "H13 k=2\n");

    let none = persemi(&["family", "match", "2,3,4", "--format", "json"]);
    assert_eq!(code(&none), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&none)).unwrap();
    assert_eq!(value["matches"], serde_json::json!([]));
}

#[test]
fn family_members_cli() {
    // Default bound is Frobenius + 2·multiplicity; H9 at k = 1 is ⟨5,7,9⟩.
    let output = persemi(&["family", "members", "H9", "--k", "1", "--format", "json"]);
    assert_eq!(code(&output), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["bound"], 23);
    assert_eq!(
        value["members"],
        serde_json::json!([0, 5, 7, 9, 10, 12, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23])
    );

    let unsupported = persemi(&["family", "members", "H7", "--k", "2"]);
    assert_eq!(code(&unsupported), 2);
}

#[test]
fn conjecture_cli() {
    let output = persemi(&[
        "conjecture",
        "--from",
        "12",
        "--to",
        "12",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&output), 0);
    assert_eq!(
        stdout_of(&output),
        "multiplicity,generators,family,k,confirmed\n12,12 13 23,H1,4,true\n"
    );

    // Below the floor: warns on stderr, reports unmatched sets, exit 1.
    let low = persemi(&["conjecture", "--from", "1", "--to", "4"]);
    assert_eq!(code(&low), 1);
    assert!(stdout_of(&low).contains("unmatched"));
    assert!(String::from_utf8(low.stderr).unwrap().contains("warning"));

    let inverted = persemi(&["conjecture", "--from", "5", "--to", "3"]);
    assert_eq!(code(&inverted), 2);
}
