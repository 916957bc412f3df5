use std::process::Command;

use serde_json::Value;

fn symcheck(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symcheck")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn passing_suite_exits_zero() {
    let (code, stdout, _) = symcheck(&["run", "sp4"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("sp4: PASS (66/66 checks passed)"));
}

#[test]
fn failing_suite_exits_one() {
    let (code, stdout, _) = symcheck(&["run", "sp2-diffop"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL  sp2-diffop/[J2,K1]"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(symcheck(&["run", "no-such-suite"]).0, 2);
    assert_eq!(symcheck(&["run"]).0, 2);
    assert_eq!(symcheck(&["frobnicate"]).0, 2);
    assert_eq!(symcheck(&["run", "so32-fock", "--cutoff", "2"]).0, 2);
    assert_eq!(symcheck(&["export", "nothing", "--json", "/dev/null"]).0, 2);
}

#[test]
fn json_report_matches_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, _, _) = symcheck(&["run", "yurke-triple", "--cutoff", "4", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "yurke-triple");
    assert_eq!(v["overall"], "FAIL");
    assert_eq!(v["records"].as_array().unwrap().len(), 3);
    assert!(v["records"][0]["details"]["observed"].is_string());
}

#[test]
fn reports_are_deterministic_apart_from_timestamp() {
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str| {
        let path = dir.path().join(name);
        symcheck(&["run", "contraction", "--json", path.to_str().unwrap()]);
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timestamp");
        v
    };
    assert_eq!(read("a.json"), read("b.json"));
}

#[test]
fn tables_directory_overrides_bundled_copy() {
    let dir = tempfile::tempdir().unwrap();
    let bundled = concat!(env!("CARGO_MANIFEST_DIR"), "/tables/sp2.json");
    let mut records: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(bundled).unwrap()).unwrap();
    // rescaling by -2 turns the diffop family into a pass and the matrix family into a fail
    for r in &mut records {
        let im: i64 = r["im"].as_str().unwrap().parse().unwrap();
        r["im"] = Value::String((-2 * im).to_string());
    }
    std::fs::write(dir.path().join("sp2.json"), serde_json::to_string(&records).unwrap()).unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, stdout, _) = symcheck(&["run", "sp2-diffop", "--tables", d]);
    assert_eq!(code, 0, "{stdout}");
    assert_eq!(symcheck(&["run", "so21-matrix", "--tables", d]).0, 1);
    assert_eq!(symcheck(&["run", "su2", "--tables", d]).0, 2, "missing su2.json is a usage error");
}

#[test]
fn export_writes_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let (code, _, _) = symcheck(&["export", "so32-fock", "--cutoff", "4", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["kind"], "fock");
    assert_eq!(v["matrices"].as_array().unwrap().len(), 10);
    assert_eq!(v["matrices"][0]["dim"], 25);
}

#[test]
fn map_command() {
    let (code, stdout, _) = symcheck(&["map", "sp2", "yurke-triple"]);
    assert_eq!((code, stdout.trim()), (0, "J2 -> S3, K1 -> Q3, K3 -> K3"));
    let (code, stdout, _) = symcheck(&["map", "su2", "sp2"]);
    assert_eq!((code, stdout.trim()), (1, "none"));
    let (code, stdout, _) = symcheck(&["map", "so32-fock", "so32", "--cutoff", "4"]);
    assert_eq!(code, 0, "the Fock tensor is isomorphic to the table: {stdout}");
}
