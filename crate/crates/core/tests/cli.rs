use symchar::cli::golden::{golden_check, GoldenTable};
use symchar::cli::run_with;
use symchar::torelli_chars::{char_torelli, Object};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("symchar").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn table_text() {
    assert_eq!(ok(&["a", "--max-degree", "1"]), "n=0: <0>\nn=1: <1^3>\n");
    assert_eq!(ok(&["torelli", "--max-degree", "3"]), "n=1: <1^3>\nn=2: <0> + <2^2>\nn=3: <3,1^2>\n");
    assert!(ok(&["a1", "--max-degree", "1"]).contains("n=1: <1> + <1^3>"));
}

#[test]
fn table_json() {
    let out = ok(&["--format", "json", "torelli", "--max-degree", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["object"], "torelli");
    assert_eq!(rows[1]["degree"], 2);
    assert_eq!(rows[1]["caps"]["sym"], 4);
    let terms = rows[1]["terms"].as_array().unwrap();
    assert!(terms.iter().any(|t| t["partition"] == serde_json::json!([2, 2]) && t["mult"] == 1));
}

#[test]
fn json_is_stable_across_runs() {
    let args = ["--format", "json", "a", "--max-degree", "3"];
    assert_eq!(ok(&args), ok(&args));
    let gamma = ["--method", "gamma", "--format", "json", "a", "--max-degree", "3"];
    assert_eq!(ok(&args), ok(&gamma));
}

#[test]
fn series_commands() {
    assert_eq!(ok(&["gamma-infinity", "--t-max", "6"]), "1 + t^2 + 2 t^4 + 3 t^6\n");
    assert_eq!(ok(&["--format", "json", "gamma-infinity"]), "[1,0,1,0,2,0,3,0,5]\n");
    assert_eq!(ok(&["poincare", "--partition", "1,1,1", "--t-max", "7"]), "<1^3>: t + 2 t^3 + 5 t^5 + 10 t^7\n");
    assert!(ok(&["moduli", "--kind", "c", "--max-degree", "2", "--t-max", "2"]).starts_with("n=0: s(0) + s(1) + s(2)\n"));
}

#[test]
fn wedge2_command() {
    assert_eq!(
        ok(&["wedge2", "--partition", "1^3"]),
        "<0> + <1^2> + <2^2> + <1^4> + <2^2,1^2> + <1^6>\n"
    );
    assert_eq!(
        ok(&["wedge2", "--partition", "1,1,1", "--plus-partition", "1"]),
        "2 <0> + 3 <1^2> + <2^2> + <2,1^2> + 2 <1^4> + <2^2,1^2> + <1^6>\n"
    );
}

#[test]
fn selftest_and_golden_pass() {
    let out = ok(&["selftest"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("pass ")).count(), 3, "{out}");
    let out = ok(&["golden"]);
    assert!(out.contains("pass A: degrees [1, 2, 3, 4]"), "{out}");
    assert!(out.contains("pass torelli: degrees [1, 2, 3, 4, 5, 6, 7, 8]"), "{out}");
}

#[test]
fn perturbed_golden_names_the_partition() {
    let mut golden = GoldenTable::bundled(Object::Torelli).unwrap();
    let lam: symchar::partitions::Partition = "3,2,1".parse().unwrap();
    golden.degrees.get_mut(&8).unwrap().add(lam, symchar::symfunc::q(1));
    let report = golden_check(&golden, &char_torelli(8).unwrap());
    assert!(!report.passed());
    assert_eq!(report.discrepancies.len(), 1);
    assert!(report.to_string().contains("n=8: <3,2,1> expected 46 got 45"), "{report}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["poincare", "--partition", "2,0"]).0, 2);
    let (code, _, err) = run(&["poincare", "--partition", "4,3,2,1", "--t-max", "2"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");
    assert_eq!(run(&["torelli", "--max-degree", "17"]).0, 2);
    assert_eq!(run(&["torelli", "--max-degree", "0"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn cache_dir_is_used_and_corruption_warned() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = ok(&["--cache-dir", d, "a", "--max-degree", "2"]);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let path = files[0].as_ref().unwrap().path();
    assert_eq!(ok(&["--cache-dir", d, "a", "--max-degree", "2"]), first);

    std::fs::write(&path, "garbage").unwrap();
    let (code, out, err) = run(&["--cache-dir", d, "a", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, first);
    assert!(err.starts_with("warning:"), "{err}");

    std::fs::write(&path, "garbage").unwrap();
    let (_, _, err) = run(&["--cache-dir", d, "--no-cache", "a", "--max-degree", "2"]);
    assert!(err.is_empty());
}
