//! End-to-end tests of the `sgp` binary: output shapes, exit codes, and
//! byte-level determinism.

use std::process::{Command, Output};

use sgp::record::SemigroupRecord;

fn sgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sgp_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgp"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("stderr is UTF-8")
}

#[test]
fn info_text_for_the_worked_example() {
    let out = sgp(&["info", "--delta-minus", "7,4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for line in [
        "gens: {7,8,9,11,12,13}",
        "gaps: {1,2,3,4,5,6,10}",
        "frobenius: 10",
        "multiplicity: 7",
        "genus: 7",
        "type: 4",
        "reduced_type: 4",
        "embedding_dimension: 6",
        "pf: {4,5,6,10}",
        "rpf: {4,5,6,10}",
        "apery_m: {0,8,9,11,12,13,17}",
        "almost_symmetric: true",
        "max_reduced_type: true",
        "classification_as: delta-minus(7,4)",
        "classification_med: no",
    ] {
        assert!(text.lines().any(|l| l == line), "missing `{line}` in:\n{text}");
    }
}

#[test]
fn info_handles_naturals() {
    let out = sgp(&["info", "--gens", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for line in ["frobenius: -1", "gaps: {}", "pf: {-1}", "gens: {1}", "half_line: true"] {
        assert!(text.lines().any(|l| l == line), "missing `{line}` in:\n{text}");
    }
}

#[test]
fn info_json_reports_med_flag() {
    let out = sgp(&["info", "--gens", "3,5,7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let record = SemigroupRecord::from_json(stdout_of(&out).trim()).unwrap();
    assert_eq!(record.gaps.to_vec(), vec![1, 2, 4]);
    assert!(record.flags.med);
    assert_eq!(record.classification_med.to_string(), "delta-fm(4,3)");
}

#[test]
fn info_rejects_bad_input_with_exit_2() {
    let gcd = sgp(&["info", "--gens", "4,6"]);
    assert_eq!(gcd.status.code(), Some(2));
    assert!(stderr_of(&gcd).contains("gcd"));
    assert!(stdout_of(&gcd).is_empty());

    let unclosed = sgp(&["info", "--gaps", "2"]);
    assert_eq!(unclosed.status.code(), Some(2));
    assert!(stderr_of(&unclosed).contains("not additively closed"));

    let junk = sgp(&["info", "--gens", "2,banana"]);
    assert_eq!(junk.status.code(), Some(2));

    let conflicting = sgp(&["info", "--gens", "2,3", "--gaps", "1"]);
    assert_eq!(conflicting.status.code(), Some(2));

    let missing = sgp(&["info"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn construct_families_and_their_errors() {
    let fm = sgp(&["construct", "delta-fm", "4", "3"]);
    assert_eq!(fm.status.code(), Some(0));
    assert!(stdout_of(&fm).lines().any(|l| l == "gens: {3,5,7}"));

    let minus = sgp(&["construct", "delta-minus", "5", "3"]);
    assert_eq!(minus.status.code(), Some(0));
    assert!(stdout_of(&minus).lines().any(|l| l == "gens: {5,6,8,9}"));

    let half = sgp(&["construct", "half-line", "1", "--format", "json"]);
    assert_eq!(half.status.code(), Some(0));
    let record = SemigroupRecord::from_json(stdout_of(&half).trim()).unwrap();
    assert_eq!(record.frobenius, -1);

    let divides = sgp(&["construct", "delta-fm", "6", "3"]);
    assert_eq!(divides.status.code(), Some(2));
    assert!(stderr_of(&divides).contains("divides"));

    let bad = sgp(&["construct", "delta-minus", "5", "5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn enumerate_streams_records_and_counts() {
    let out = sgp(&["enumerate", "--max-genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines.len(), 4);
    for line in &lines {
        let record = SemigroupRecord::from_json(line).unwrap();
        assert!(record.genus <= 2);
    }
    assert_eq!(stderr_of(&out).trim(), "4");

    let trivial = sgp(&["enumerate", "--max-genus", "0"]);
    let lines: Vec<&str> = stdout_of(&trivial).lines().collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(SemigroupRecord::from_json(lines[0]).unwrap().frobenius, -1);
}

#[test]
fn enumerate_filter_honors_med_characterization() {
    let out = sgp(&["enumerate", "--max-genus", "8", "--filter", "med"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert!(!lines.is_empty());
    for line in lines {
        let record = SemigroupRecord::from_json(line).unwrap();
        assert!(record.flags.med);
        if record.frobenius >= 0 {
            assert_eq!(record.semigroup_type, record.multiplicity - 1);
        }
    }
}

#[test]
fn enumerate_writes_files_and_stays_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    let path_str = path.to_str().unwrap();

    let first = sgp(&["enumerate", "--max-genus", "5", "--out", path_str]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout_of(&first).trim(), "27");
    let first_bytes = std::fs::read(&path).unwrap();
    assert_eq!(first_bytes.iter().filter(|&&b| b == b'\n').count(), 27);

    let second = sgp(&["enumerate", "--max-genus", "5", "--out", path_str]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), first_bytes);

    let streamed = sgp(&["enumerate", "--max-genus", "5"]);
    assert_eq!(streamed.stdout, first_bytes);
}

#[test]
fn enumerate_rejects_unknown_filter_and_caps() {
    let unknown = sgp(&["enumerate", "--max-genus", "3", "--filter", "frobenius"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr_of(&unknown).contains("unknown predicate"));

    let over_cap = sgp(&["enumerate", "--max-genus", "31"]);
    assert_eq!(over_cap.status.code(), Some(2));
    assert!(stderr_of(&over_cap).contains("cap"));

    let negative = sgp(&["enumerate", "--max-genus", "-1"]);
    assert_eq!(negative.status.code(), Some(2));
}

#[test]
fn genus_cap_env_var_overrides_default() {
    let tightened = sgp_with_env(&["enumerate", "--max-genus", "6"], "SGP_GENUS_CAP", "5");
    assert_eq!(tightened.status.code(), Some(2));
    assert!(stderr_of(&tightened).contains("exceeds the cap 5"));

    let loosened = sgp_with_env(&["enumerate", "--max-genus", "6"], "SGP_GENUS_CAP", "40");
    assert_eq!(loosened.status.code(), Some(0));

    let verify_tight = sgp_with_env(
        &["verify", "pf-oracle", "--max-genus", "6"],
        "SGP_GENUS_CAP",
        "5",
    );
    assert_eq!(verify_tight.status.code(), Some(2));

    let invalid = sgp_with_env(&["enumerate", "--max-genus", "3"], "SGP_GENUS_CAP", "banana");
    assert_eq!(invalid.status.code(), Some(2));
    assert!(stderr_of(&invalid).contains("SGP_GENUS_CAP"));
}

#[test]
fn verify_single_theorem_passes() {
    let out = sgp(&["verify", "main-theorem", "--max-genus", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("main-theorem: pass ("), "{text}");
    assert!(stderr_of(&out).contains("main-theorem"));
}

#[test]
fn verify_all_covers_the_registry() {
    let out = sgp(&["verify", "all", "--max-genus", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<&str> = stdout_of(&out).lines().collect();
    assert_eq!(lines.len(), 11);
    let expected_ids = [
        "pf-oracle",
        "genus-inequality",
        "chain",
        "rpf-shift",
        "gap-window",
        "med-type",
        "main-theorem",
        "trichotomy",
        "type-edim",
        "med-equiv",
        "med-theorem",
    ];
    for (line, id) in lines.iter().zip(expected_ids) {
        assert!(line.starts_with(&format!("{id}: pass (")), "{line}");
    }
}

#[test]
fn verify_json_omits_timing_and_stays_deterministic() {
    let first = sgp(&["verify", "all", "--max-genus", "8", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    for line in stdout_of(&first).lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(value.get("theorem_id").is_some());
        assert!(value.get("universe_size").is_some());
        assert!(value.get("violations").is_some());
        assert!(value.get("elapsed").is_none());
    }
    let second = sgp(&["verify", "all", "--max-genus", "8", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_rejects_unknown_theorem() {
    let out = sgp(&["verify", "unknown-id", "--max-genus", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown theorem"));
}

#[test]
fn info_runs_are_byte_identical() {
    let first = sgp(&["info", "--delta-minus", "7,4", "--format", "json"]);
    let second = sgp(&["info", "--delta-minus", "7,4", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}
