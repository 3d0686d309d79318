use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use scatbench::cli::{EXIT_FAIL, EXIT_INPUT, EXIT_PASS, EXIT_RESOURCE};
use scatbench::{parse_document, serialize_document, LoadError, Workspace};

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("scatbench-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scatbench")).args(args).current_dir(dir).output().unwrap()
}

fn corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "json")).collect();
    files.sort();
    files
}

/// Set SCATBENCH_BLESS=1 to rewrite the documents in canonical form.
#[test]
fn corpus_documents_are_canonical_and_load() {
    let files = corpus();
    assert!(files.len() >= 3);
    for f in files {
        let text = std::fs::read_to_string(&f).unwrap();
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        let canonical = serialize_document(&doc);
        if std::env::var_os("SCATBENCH_BLESS").is_some() {
            std::fs::write(&f, &canonical).unwrap();
        } else {
            assert_eq!(text, canonical, "{} is not canonical", f.display());
        }
        assert_eq!(parse_document(&canonical).unwrap(), doc);
        let ws = Workspace::load(&doc).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        assert_eq!(ws.names().count(), doc.entities.len());
    }
}

#[test]
fn built_tables_reload_to_the_same_tables() {
    let dir = scratch("rebuild");
    for spec in ["delta:2", "horn:3:1", "cyclic:3", "s0"] {
        let out = run(&dir, &["build", spec, "--bound", "2"]);
        assert_eq!(out.status.code(), Some(EXIT_PASS), "{spec}");
        let text = String::from_utf8(out.stdout).unwrap();
        let doc = parse_document(&text).unwrap();
        let ws = Workspace::load(&doc).unwrap();
        let again = scatbench::cli::as_document("input", ws.get("input").unwrap());
        assert_eq!(again.entities, doc.entities, "{spec}");
    }
}

#[test]
fn face_identity_violation_is_rejected_with_a_witness() {
    let dir = scratch("audit");
    let out = run(&dir, &["build", "delta:2", "--bound", "2"]);
    let mut doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // d_0 of the 2-simplex [0,1,2] is [1,2]; point it at [0,1] instead
    let faces = &mut doc["entities"][0]["construction"]["simplicial_tables"]["faces"][2][0];
    let top = faces.as_array().unwrap().len() - 1;
    faces[top] = serde_json::json!(0);
    let parsed = parse_document(&doc.to_string()).unwrap();
    match Workspace::load(&parsed) {
        Err(LoadError::Audit { entity, witness }) => {
            assert_eq!(entity, "input");
            assert!(!witness.is_empty());
        }
        other => panic!("expected an audit failure, got {:?}", other.map(|_| ())),
    }
    let path = dir.join("bad.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = run(&dir, &["compute", "homology", "input", "--doc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&out.stderr).contains("audit failed"));
}

#[test]
fn input_errors_and_resource_limits_have_their_exit_codes() {
    let dir = scratch("codes");
    let path = dir.join("doc.json");
    std::fs::write(&path, "{\"version\": 1,\n \"entities\": [ {\"name\": \"x\" } ]}").unwrap();
    let out = run(&dir, &["build", "x", "--doc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    std::fs::write(&path, r#"{"version": 1, "entities": [{"name": "y", "construction": {"diag": {"of": "missing"}}}]}"#).unwrap();
    assert_eq!(run(&dir, &["build", "y", "--doc", path.to_str().unwrap()]).status.code(), Some(EXIT_INPUT));

    std::fs::write(&path, r#"{"version": 1, "entities": [{"name": "a", "construction": {"dec": {"of": "b"}}}, {"name": "b", "construction": {"diag": {"of": "a"}}}]}"#).unwrap();
    let out = run(&dir, &["build", "a", "--doc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_INPUT));

    // the fundamental groupoid of the circle has infinite vertex groups
    std::fs::write(
        &path,
        r#"{"version": 1, "entities": [{"name": "s", "construction": {"boundary": {"n": 2, "bound": 3}}}, {"name": "p", "construction": {"fundamental_groupoid": {"of": "s"}}}]}"#,
    )
    .unwrap();
    assert_eq!(run(&dir, &["build", "p", "--doc", path.to_str().unwrap()]).status.code(), Some(EXIT_RESOURCE));
    assert_eq!(run(&dir, &["verify", "no-such-suite"]).status.code(), Some(EXIT_INPUT));
}

#[test]
fn verify_is_deterministic_and_report_replays_it() {
    let dir = scratch("verify");
    let args = ["verify", "unit", "k-theory", "--format", "json"];
    let first = run(&dir, &args);
    assert_eq!(first.status.code(), Some(EXIT_PASS));
    let second = run(&dir, &args);
    assert_eq!(first.stdout, second.stdout);
    let replay = run(&dir, &["report", "--format", "json"]);
    assert_eq!(replay.status.code(), Some(EXIT_PASS));
    assert_eq!(replay.stdout, first.stdout);

    let mut reports: Vec<scatbench::SuiteReport> = serde_json::from_slice(&first.stdout).unwrap();
    reports[0].checks[0].verdict = scatbench::Verdict::Fail;
    reports[0].passed = false;
    let path = dir.join("failed.json");
    std::fs::write(&path, serde_json::to_string(&reports).unwrap()).unwrap();
    let out = run(&dir, &["report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL unit"));
}

#[test]
fn computations_print_exact_invariants() {
    let dir = scratch("compute");
    let out = run(&dir, &["compute", "homology", "cyclic:2", "--bound", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["homology"][1]["torsion"], serde_json::json!([2]));
    assert_eq!(v["homology"][2]["torsion"], serde_json::json!([]));
    assert_eq!(v["homology"][3]["torsion"], serde_json::json!([2]));

    let out = run(&dir, &["compute", "pi0", "discrete:3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 3);

    let out = run(&dir, &["compute", "pi1", "sphere:1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["abelianization"]["free_rank"], 1);
    assert_eq!(v["order"], serde_json::Value::Null);

    let out = run(&dir, &["compute", "ktheory", "s0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["k0"]["elements"], 2);
    assert_eq!(v["k1"]["order"], 1);

    let out = run(&dir, &["compute", "dec", "delta:1", "--bound", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let doc = parse_document(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert!(Workspace::load(&doc).is_ok());
}
