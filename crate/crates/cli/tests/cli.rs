//! End-to-end tests of the binary: output formats, cross-format agreement,
//! exit codes, and file output.

use serde_json::Value;
use springer_core::orbit::{self, GroupKind};
use std::process::{Command, Output};

fn springer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = springer(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    springer(args).status.code().expect("no signal")
}

#[test]
fn orbits_tsv_matches_orbit_count() {
    let tsv = stdout_of(&["orbits", "--group", "sp", "--size", "8", "--ell", "3", "--format", "tsv"]);
    let rows: Vec<&str> = tsv.lines().collect();
    let expected = orbit::orbit_labels(GroupKind::Sp(8)).len();
    assert_eq!(rows.len(), expected + 1, "header plus one row per orbit");
    assert_eq!(rows[0], "partition\tdecoration\tdistinguished\tlocal_systems");
}

#[test]
fn springer_sl6_l2_has_15_entries() {
    let json = stdout_of(&["springer", "--group", "sl", "--size", "6", "--ell", "2"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 15);
    assert_eq!(v["group"], "SL(6)");
}

#[test]
fn json_round_trips_byte_identical() {
    for args in [
        vec!["orbits", "--group", "so", "--size", "8", "--ell", "3"],
        vec!["cuspidals", "--group", "spin", "--size", "10", "--ell", "3"],
        vec!["springer", "--group", "sp", "--size", "8", "--ell", "2"],
        vec!["verify", "--all", "--max-size", "6", "--primes", "2,3"],
        vec![
            "lookup", "--group", "sp", "--size", "4", "--ell", "2", "--orbit", "2,2",
        ],
    ] {
        let emitted = stdout_of(&args);
        let parsed: Value = serde_json::from_str(&emitted).unwrap();
        let reserialized = format!("{}\n", serde_json::to_string_pretty(&parsed).unwrap());
        assert_eq!(emitted, reserialized, "round trip for {args:?}");
    }
}

/// Whether a column holds an index-pair map rather than a bare partition
/// (both serialize as JSON arrays; only the cell syntax differs).
fn is_pair_map_column(key: &str) -> bool {
    matches!(key, "multiplicities" | "irr_label")
}

/// Independent re-rendering of a JSON value in the TSV cell syntax.
fn cell_of(key: &str, value: &Value) -> String {
    match value {
        Value::Null => "-".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            if is_pair_map_column(key) {
                let body: Vec<String> = items
                    .iter()
                    .map(|pair| {
                        let kv = pair.as_array().unwrap();
                        format!("{}:{}", kv[0], cell_of("", &kv[1]))
                    })
                    .collect();
                format!("{{{}}}", body.join(","))
            } else {
                let body: Vec<String> = items.iter().map(|x| x.to_string()).collect();
                format!("[{}]", body.join(","))
            }
        }
        Value::Object(map) => {
            // Characters render as residue/modulus.
            format!("{}/{}", map["residue"], map["modulus"])
        }
    }
}

#[test]
fn tsv_and_json_encode_identical_data() {
    for args in [
        vec!["orbits", "--group", "sp", "--size", "10", "--ell", "3"],
        vec!["levis", "--group", "so", "--size", "8", "--ell", "2"],
        vec!["cuspidals", "--group", "sl", "--size", "6", "--ell", "2"],
        vec!["springer", "--group", "so", "--size", "8", "--ell", "2"],
        vec!["verify", "--all", "--max-size", "5", "--primes", "2,3"],
    ] {
        let json_args: Vec<&str> = args.clone();
        let mut tsv_args = args.clone();
        tsv_args.extend(["--format", "tsv"]);
        let parsed: Value = serde_json::from_str(&stdout_of(&json_args)).unwrap();
        let rows = parsed["rows"].as_array().unwrap();
        let tsv = stdout_of(&tsv_args);
        let mut lines = tsv.lines();
        let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
        let grid: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
        assert_eq!(grid.len(), rows.len(), "{args:?}: row counts differ");
        for (row, cells) in rows.iter().zip(&grid) {
            assert_eq!(cells.len(), header.len());
            for (key, cell) in header.iter().zip(cells) {
                assert_eq!(
                    &cell_of(key, &row[*key]),
                    cell,
                    "{args:?}: field {key} differs"
                );
            }
        }
    }
}

#[test]
fn verify_failure_exit_and_success_exit() {
    assert_eq!(
        exit_code(&["verify", "--all", "--max-size", "8", "--primes", "2,3", "--out", "/dev/null"]),
        0
    );
    assert_eq!(
        exit_code(&["verify", "--identity", "sp-l2-count", "--size", "3", "--ell", "2", "--out", "/dev/null"]),
        0
    );
    assert_eq!(
        exit_code(&["verify", "--bijection", "omega", "--group", "sp", "--size", "8", "--ell", "2", "--out", "/dev/null"]),
        0
    );
}

#[test]
fn domain_errors_exit_1() {
    // The explicit table away from characteristic 2 is not determined.
    assert_eq!(exit_code(&["springer", "--group", "sp", "--size", "8", "--ell", "5"]), 1);
    // Spin orbit-level local systems are not modelled.
    assert_eq!(exit_code(&["orbits", "--group", "spin", "--size", "8", "--ell", "3"]), 1);
    // Lookup of a label outside the orbit set.
    assert_eq!(
        exit_code(&["lookup", "--group", "sp", "--size", "4", "--ell", "2", "--orbit", "3,1"]),
        1
    );
    // Ordinary map away from characteristic 2.
    assert_eq!(
        exit_code(&["springer", "--group", "sp", "--size", "8", "--ell", "3", "--ordinary"]),
        1
    );
}

#[test]
fn usage_errors_exit_2() {
    // Unknown flags are caught by the parser.
    assert_eq!(exit_code(&["orbits", "--group", "sp", "--size", "8", "--no-such-flag"]), 2);
    // Non-prime characteristic.
    assert_eq!(exit_code(&["orbits", "--group", "sp", "--size", "8", "--ell", "6"]), 2);
    // Bad group kind or size.
    assert_eq!(exit_code(&["orbits", "--group", "su", "--size", "8", "--ell", "3"]), 2);
    assert_eq!(exit_code(&["orbits", "--group", "sp", "--size", "7", "--ell", "3"]), 2);
    assert_eq!(exit_code(&["orbits", "--group", "sp", "--size", "200", "--ell", "3"]), 2);
    // Verify without a mode.
    assert_eq!(exit_code(&["verify"]), 2);
    // Residue outside type A.
    assert_eq!(
        exit_code(&["lookup", "--group", "sp", "--size", "4", "--ell", "2", "--orbit", "4", "--residue", "1"]),
        2
    );
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orbits.json");
    let args = ["orbits", "--group", "so", "--size", "9", "--ell", "2"];
    let stdout = stdout_of(&args);
    let mut with_out: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    with_out.extend(["--out", path_str]);
    assert_eq!(exit_code(&with_out), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn lookup_finds_documented_entries() {
    let v: Value = serde_json::from_str(&stdout_of(&[
        "lookup", "--group", "sp", "--size", "4", "--ell", "2", "--orbit", "1,1,1,1",
    ]))
    .unwrap();
    assert_eq!(v["entry"]["levi_blocks"], serde_json::json!([1, 1]));
    assert_eq!(v["entry"]["irr_label"], serde_json::json!([[1, [2]]]));

    let v: Value = serde_json::from_str(&stdout_of(&[
        "lookup", "--group", "sl", "--size", "4", "--ell", "3", "--orbit", "4", "--residue", "2",
    ]))
    .unwrap();
    assert_eq!(v["entry"]["levi_blocks"], serde_json::json!([2, 2]));
    assert_eq!(v["entry"]["character"], serde_json::json!({"modulus": 4, "residue": 2}));
}

#[test]
fn ordinary_springer_table() {
    let v: Value = serde_json::from_str(&stdout_of(&[
        "springer", "--group", "so", "--size", "7", "--ell", "2", "--ordinary",
    ]))
    .unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2); // Part_2(3) = {(3),(2,1)}
    assert_eq!(rows[1]["label"], serde_json::json!([2, 1]));
    assert_eq!(rows[1]["orbit"], serde_json::json!([2, 2, 1, 1, 1]));
}

#[test]
fn decorated_lookup_round_trip() {
    let v: Value = serde_json::from_str(&stdout_of(&[
        "lookup", "--group", "so", "--size", "8", "--ell", "2", "--orbit", "2,2,2,2",
        "--decoration", "II",
    ]))
    .unwrap();
    assert_eq!(v["entry"]["orbit_decoration"], "II");
    assert_eq!(v["entry"]["levi_decoration"], "II");
}
